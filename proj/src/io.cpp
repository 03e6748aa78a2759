#include "seqlab/io.hpp"

#include <cstdio>

#include "seqlab/error.hpp"

namespace seqlab {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json to_json(const Sequence& s) {
    json j;
    j["p"] = s.period();
    j["label"] = s.label();
    json values = json::array();
    for (const auto& v : s.values()) values.push_back({v.real(), v.imag()});
    j["values"] = std::move(values);
    if (s.has_exact()) {
        json ex = json::array();
        for (const auto& e : s.exact()) {
            if (e) {
                ex.push_back({e->u, e->v});
            } else {
                ex.push_back(nullptr);
            }
        }
        j["exact"] = std::move(ex);
        if (s.exact_scale() != 1.0) j["exact_scale"] = s.exact_scale();
    }
    return j;
}

Sequence sequence_from_json(const json& j) {
    try {
        const int p = j.at("p").get<int>();
        const std::string label = j.value("label", "");
        if (j.contains("exact")) {
            std::vector<ExactEntry> ex;
            for (const auto& e : j.at("exact")) {
                if (e.is_null()) {
                    ex.emplace_back(std::nullopt);
                } else {
                    ex.emplace_back(Monomial{e.at(0).get<int>(), e.at(1).get<int>()});
                }
            }
            return Sequence::from_exact(p, std::move(ex), j.value("exact_scale", 1.0), label);
        }
        std::vector<cplx> values;
        for (const auto& v : j.at("values")) values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        if (static_cast<int>(values.size()) != p) throw Error(Errc::PeriodMismatch, "values length != p");
        return Sequence(std::move(values), label);
    } catch (const json::exception& e) {
        throw Error(Errc::InvalidArgument, std::string("malformed sequence JSON: ") + e.what());
    }
}

json to_json(const FamilyDescriptor& fam) {
    return {{"family", fam.name()},
            {"p", fam.p()},
            {"generator", fam.field().generator()},
            {"size", fam.size()},
            {"normalized", fam.normalized()},
            {"index_ranges", fam.index_ranges()}};
}

std::string family_to_jsonl(const FamilyDescriptor& fam, const std::vector<Sequence>& members) {
    std::string out = to_json(fam).dump() + "\n";
    for (const auto& s : members) out += to_json(s).dump() + "\n";
    return out;
}

namespace {

json witness_json(const VerificationReport& rep, const Witness& w) {
    json j{{"first", w.first}, {"second", w.second}, {"t", w.t}, {"w", w.w}, {"magnitude", w.magnitude}};
    if (w.first < rep.labels.size()) j["first_label"] = rep.labels[w.first];
    if (w.second < rep.labels.size()) j["second_label"] = rep.labels[w.second];
    return j;
}

}  // namespace

json to_json(const VerificationReport& rep, bool include_timing) {
    json j;
    j["schema"] = kReportSchema;
    j["check"] = "family_bounds";
    j["family"] = rep.family;
    j["p"] = rep.p;
    j["generator"] = rep.generator;
    j["size"] = rep.size;
    j["normalized"] = rep.normalized;
    j["index_ranges"] = rep.index_ranges;
    if (rep.pairs.kind == PairMode::Kind::exhaustive) {
        j["pair_mode"] = {{"mode", "exhaustive"}};
    } else {
        j["pair_mode"] = {{"mode", "sampled"}, {"seed", rep.pairs.seed}, {"count", rep.pairs.count}};
    }
    json bounds = json::array();
    for (const auto& c : rep.checks) {
        json b{{"name", c.name}, {"measured", c.measured}, {"evaluated", c.evaluated}, {"pass", c.pass}};
        if (c.bound) {
            b["bound_expr"] = c.bound->expr;
            b["bound"] = c.bound->value;
        } else {
            b["bound_expr"] = nullptr;
            b["bound"] = nullptr;
        }
        if (c.evaluated > 0) b["witness"] = witness_json(rep, c.witness);
        bounds.push_back(std::move(b));
    }
    j["bounds"] = std::move(bounds);
    j["equivalent_pairs"] = {{"count", rep.equivalent_pairs}, {"max_magnitude", rep.equivalent_pairs_max}};
    if (rep.time_shift_classes) {
        j["time_shift_classes"] = *rep.time_shift_classes;
    } else {
        j["time_shift_classes"] = nullptr;
    }
    j["pass"] = rep.pass();
    if (include_timing) j["wall_time_s"] = rep.wall_time_s;
    return j;
}

json to_json(const Theorem2Report& rep) {
    json witnesses = json::array();
    for (auto i : rep.unmatched_system) witnesses.push_back({{"unmatched_system", i}});
    for (auto i : rep.unmatched_family) witnesses.push_back({{"unmatched_family", i}});
    return {{"schema", kReportSchema},
            {"check", "theorem2"},
            {"p", rep.p},
            {"generator", rep.generator},
            {"pass", rep.pass()},
            {"pairs", rep.pairs.size()},
            {"system_size", rep.system_size},
            {"family_size", rep.family_size},
            {"worst_residual", rep.worst_residual},
            {"scalars_summary",
             {{"plus_one", rep.scalars_plus_one},
              {"minus_one", rep.scalars_minus_one},
              {"other", rep.scalars_other},
              {"worst_unit_deviation", rep.worst_unit_deviation}}},
            {"witnesses", witnesses}};
}

json to_json(const RepresentationReport& rep) {
    return {{"schema", kReportSchema},
            {"check", rep.check},
            {"p", rep.p},
            {"pass", rep.pass},
            {"samples", rep.samples},
            {"seed", rep.seed},
            {"worst_residual", rep.worst_residual},
            {"scalars_summary",
             {{"scalar", {rep.scalar.real(), rep.scalar.imag()}},
              {"spread", rep.scalar_spread},
              {"exact_lift", rep.exact_lift}}},
            {"witnesses", json::array()}};
}

json comparison_to_json(int p, int generator, const std::vector<ComparisonRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json row{{"family", r.family}, {"size", r.size}, {"auto_max", r.auto_max},
                 {"ft_max", r.ft_max}, {"cross_mode", r.cross_mode}};
        if (r.cross_max) {
            row["cross_max"] = *r.cross_max;
        } else {
            row["cross_max"] = nullptr;
        }
        arr.push_back(std::move(row));
    }
    return {{"schema", kReportSchema}, {"check", "compare"}, {"p", p}, {"generator", generator}, {"rows", arr}};
}

std::string comparison_to_csv(const std::vector<ComparisonRow>& rows) {
    std::string out = "family,size,auto_max,cross_max,ft_max,cross_mode\n";
    for (const auto& r : rows) {
        out += r.family + "," + std::to_string(r.size) + "," + format_double(r.auto_max) + "," +
               (r.cross_max ? format_double(*r.cross_max) : std::string("")) + "," +
               format_double(r.ft_max) + "," + r.cross_mode + "\n";
    }
    return out;
}

}  // namespace seqlab
