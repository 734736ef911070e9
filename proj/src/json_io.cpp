#include "listdec/json_io.hpp"

#include <fstream>

namespace listdec {

using nlohmann::json;

namespace {

u64 get_uint(const json& j, const char* key) {
    require(j.contains(key), std::string("json: missing field '") + key + "'");
    const auto& v = j.at(key);
    require(v.is_number_unsigned() || (v.is_number_integer() && v.get<i64>() >= 0),
            std::string("json: field '") + key + "' must be a nonnegative integer");
    return v.get<u64>();
}

u32 residue(const json& v, u32 q, const char* what) {
    require(v.is_number_integer() && v.get<i64>() >= 0,
            std::string("json: ") + what + " must be a nonnegative integer");
    u64 x = v.get<u64>();
    require(x < q, std::string("json: ") + what + " out of range [0, q)");
    return (u32)x;
}

std::vector<u32> residue_vector(const json& v, u32 q, const char* what) {
    require(v.is_array(), std::string("json: ") + what + " must be an array");
    std::vector<u32> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(residue(e, q, what));
    return out;
}

json hist_to_json(const std::map<u32, u32>& hist) {
    json out = json::object();
    for (const auto& [k, v] : hist) out[std::to_string(k)] = v;
    return out;
}

}  // namespace

CodeParams params_from_json(const json& j) {
    require(j.is_object(), "params: expected an object");
    require(j.contains("code") && j.at("code").is_string(), "params: missing 'code'");
    const std::string code = j.at("code").get<std::string>();
    const u64 q = get_uint(j, "q");
    require(q >= 2 && q <= ((u64)1 << 31), "params: q out of range");
    const u32 s = (u32)get_uint(j, "s");
    const u32 n = (u32)get_uint(j, "n");
    const u32 d = (u32)get_uint(j, "d");
    u32 alpha = 0;
    if (j.contains("alpha")) alpha = residue(j.at("alpha"), (u32)q, "alpha");
    Field F((u32)q, alpha);
    if (code == "frs") {
        require(!j.contains("points"), "params: 'points' is only valid for mult");
        return FrsParams(F, s, n, d);
    }
    if (code == "mult") {
        std::vector<u32> points;
        if (j.contains("points")) points = residue_vector(j.at("points"), (u32)q, "point");
        return MultParams(F, s, n, d, std::move(points));
    }
    throw ParamError("params: 'code' must be \"frs\" or \"mult\"");
}

json params_to_json(const CodeParams& params) {
    json j;
    if (std::holds_alternative<FrsParams>(params)) {
        const auto& p = std::get<FrsParams>(params);
        j = {{"code", "frs"}, {"q", p.field.p}, {"s", p.s}, {"n", p.n}, {"d", p.d},
             {"alpha", p.field.alpha}};
    } else {
        const auto& p = std::get<MultParams>(params);
        j = {{"code", "mult"}, {"q", p.field.p}, {"s", p.s}, {"n", p.n}, {"d", p.d},
             {"alpha", p.field.alpha}, {"points", p.points}};
    }
    return j;
}

Codeword word_from_json(const json& j, u32 q) {
    require(j.is_object() && j.contains("columns"), "word: missing 'columns'");
    const auto& cols = j.at("columns");
    require(cols.is_array() && !cols.empty(), "word: 'columns' must be a nonempty array");
    const u32 n = (u32)cols.size();
    const u32 s = (u32)cols.at(0).size();
    Codeword w(n, s);
    for (u32 i = 0; i < n; ++i) {
        auto col = residue_vector(cols.at(i), q, "word entry");
        require(col.size() == s, "word: ragged columns");
        std::copy(col.begin(), col.end(), w.a.begin() + (size_t)i * s);
    }
    return w;
}

json word_to_json(const Codeword& w) {
    json cols = json::array();
    for (u32 i = 0; i < w.n; ++i) {
        auto col = w.column(i);
        cols.push_back(std::vector<u32>(col.begin(), col.end()));
    }
    return json{{"columns", cols}};
}

RecoverySets sets_from_json(const json& j, u32 q) {
    require(j.is_object() && j.contains("sets"), "sets: missing 'sets'");
    const auto& arr = j.at("sets");
    require(arr.is_array() && !arr.empty(), "sets: must be a nonempty array");
    u32 s = 0;
    std::vector<std::vector<std::vector<u32>>> sets;
    sets.reserve(arr.size());
    for (const auto& position : arr) {
        require(position.is_array() && !position.empty(),
                "sets: each position needs at least one candidate");
        std::vector<std::vector<u32>> cands;
        for (const auto& cand : position) {
            auto col = residue_vector(cand, q, "set entry");
            if (s == 0) s = (u32)col.size();
            cands.push_back(std::move(col));
        }
        sets.push_back(std::move(cands));
    }
    RecoverySets out(s, std::move(sets));
    if (j.contains("ell"))
        require(out.ell() <= get_uint(j, "ell"), "sets: a position exceeds the declared ell");
    return out;
}

json sets_to_json(const RecoverySets& sets) {
    return json{{"ell", sets.ell()}, {"sets", sets.sets}};
}

Poly message_from_json(const json& j, u32 q) {
    require(j.is_object() && j.contains("coeffs"), "message: missing 'coeffs'");
    return Poly(residue_vector(j.at("coeffs"), q, "coefficient"));
}

json message_to_json(const Poly& f) { return json{{"coeffs", f.c}}; }

CandidateSpace space_from_json(const json& j, u32 q) {
    require(j.is_object(), "space: expected an object");
    CandidateSpace cs;
    cs.m = (u32)get_uint(j, "m");
    cs.D = (u32)get_uint(j, "D");
    cs.empty = j.value("empty", false);
    if (!cs.empty) {
        cs.offset = Poly(residue_vector(j.at("offset"), q, "offset coefficient"));
        for (const auto& b : j.at("basis"))
            cs.basis.emplace_back(residue_vector(b, q, "basis coefficient"));
    }
    return cs;
}

json space_to_json(const CandidateSpace& space) {
    json basis = json::array();
    for (const auto& b : space.basis) basis.push_back(b.c);
    return json{{"m", space.m},
                {"D", space.D},
                {"empty", space.empty},
                {"offset", space.offset.c},
                {"basis", basis}};
}

std::vector<Poly> messages_from_json(const json& j, u32 q) {
    require(j.is_object() && j.contains("messages"), "list: missing 'messages'");
    std::vector<Poly> out;
    for (const auto& msg : j.at("messages"))
        out.emplace_back(residue_vector(msg, q, "message coefficient"));
    return out;
}

json messages_to_json(const std::vector<Poly>& list) {
    json msgs = json::array();
    for (const auto& f : list) msgs.push_back(f.c);
    return json{{"messages", msgs}};
}

json stats_to_json(const SubspaceStats& stats) {
    return json{{"dims", stats.dims},       {"mean", stats.mean.str()},
                {"bound", stats.bound.str()}, {"r0", stats.r0},
                {"r", stats.r}};
}

json report_to_json(const Singleton2Report& rep) {
    return json{{"experiment", "singleton2"},
                {"q", 211},
                {"s", 5},
                {"n", 40},
                {"d", 49},
                {"m", 2},
                {"trials", rep.trials},
                {"seed", rep.seed},
                {"errors", rep.errors},
                {"rho", rep.rho.str()},
                {"guaranteed", rep.guaranteed},
                {"missing_planted", rep.missing_planted},
                {"oversize_lists", rep.oversize_lists},
                {"max_list_size", rep.max_list},
                {"list_size_histogram", hist_to_json(rep.list_hist)},
                {"elapsed_seconds", rep.seconds}};
}

json report_to_json(const ContainmentReport& rep) {
    json dims = json::object();
    for (const auto& [k, v] : rep.dim_hist) dims[std::to_string(k)] = v;
    return json{{"experiment", "containment"}, {"code", rep.code},
                {"m", rep.m},                  {"trials", rep.trials},
                {"errors", rep.errors},        {"seed", rep.seed},
                {"max_dim", rep.max_dim},      {"dim_histogram", dims},
                {"elapsed_seconds", rep.seconds}};
}

json report_to_json(const ListsizeReport& rep) {
    return json{{"experiment", "listsize"},
                {"m", rep.m},
                {"trials", rep.trials},
                {"errors", rep.errors},
                {"seed", rep.seed},
                {"rho", rep.rho.str()},
                {"bound", rep.bound.str()},
                {"max_list_size", rep.max_list},
                {"list_size_histogram", hist_to_json(rep.list_hist)},
                {"elapsed_seconds", rep.seconds}};
}

json report_to_json(const PruneReport& rep) {
    return json{{"experiment", "prune"},
                {"trials", rep.trials},
                {"seed", rep.seed},
                {"eta", rep.eta},
                {"epsilon", rep.epsilon.str()},
                {"total_codewords", rep.total_codewords},
                {"missed", rep.missed},
                {"miss_rate", rep.miss_rate},
                {"elapsed_seconds", rep.seconds}};
}

json report_to_json(const SubspaceReport& rep) {
    json j{{"experiment", "subspace"},
                {"instances", rep.instances},
                {"seed", rep.seed},
                {"attempts", rep.attempts},
                {"violations", rep.violations},
                {"r_histogram", hist_to_json(rep.r_hist)},
                {"max_mean", rep.max_mean},
                {"min_bound", rep.min_bound},
                {"r0_direction_max", rep.r0_direction_max},
                {"r0_affine_max", rep.r0_affine_max},
                {"fine_bound_max", rep.fine_bound_max},
                {"iterative_checked", rep.iterative_checked},
                {"elapsed_seconds", rep.seconds}};
    if (rep.has_sample) j["sample_stats"] = stats_to_json(rep.sample_stats);
    return j;
}

const Field& params_field(const CodeParams& params) {
    return std::visit([](const auto& p) -> const Field& { return p.field; }, params);
}
u32 params_n(const CodeParams& params) {
    return std::visit([](const auto& p) { return p.n; }, params);
}
u32 params_s(const CodeParams& params) {
    return std::visit([](const auto& p) { return p.s; }, params);
}
u32 params_d(const CodeParams& params) {
    return std::visit([](const auto& p) { return p.d; }, params);
}
Codeword params_encode(const CodeParams& params, const Poly& message) {
    if (std::holds_alternative<FrsParams>(params))
        return encode_frs(std::get<FrsParams>(params), message);
    return encode_mult(std::get<MultParams>(params), message);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParamError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    require(out.good(), "cannot open file for writing: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace listdec
