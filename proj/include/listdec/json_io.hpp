#pragma once

// JSON schemas for the file formats the CLI consumes and produces.  All
// integers are residues in [0, q); coefficient lists are lowest degree first.
//
//   params   {"code":"frs"|"mult","q":int,"s":int,"n":int,"d":int,
//             "alpha":int optional,"points":[int] optional}
//   word     {"columns":[[int x s] x n]}
//   sets     {"ell":int,"sets":[[[int x s],...] x n]}
//   space    {"m":int,"D":int,"offset":[int],"basis":[[int]],"empty":bool}
//   message  {"coeffs":[int]}
//   list     {"messages":[[int],...]}
//   stats    {"dims":[int],"mean":"a/b","bound":"a/b","r0":int,"r":int}

#include <variant>

#include "json.hpp"
#include "listdec/analysis.hpp"
#include "listdec/decoder.hpp"
#include "listdec/experiments.hpp"

namespace listdec {

using CodeParams = std::variant<FrsParams, MultParams>;

CodeParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const CodeParams& params);

Codeword word_from_json(const nlohmann::json& j, u32 q);
nlohmann::json word_to_json(const Codeword& w);

RecoverySets sets_from_json(const nlohmann::json& j, u32 q);
nlohmann::json sets_to_json(const RecoverySets& sets);

Poly message_from_json(const nlohmann::json& j, u32 q);
nlohmann::json message_to_json(const Poly& f);

CandidateSpace space_from_json(const nlohmann::json& j, u32 q);
nlohmann::json space_to_json(const CandidateSpace& space);

std::vector<Poly> messages_from_json(const nlohmann::json& j, u32 q);
nlohmann::json messages_to_json(const std::vector<Poly>& list);

nlohmann::json stats_to_json(const SubspaceStats& stats);

nlohmann::json report_to_json(const Singleton2Report& rep);
nlohmann::json report_to_json(const ContainmentReport& rep);
nlohmann::json report_to_json(const ListsizeReport& rep);
nlohmann::json report_to_json(const PruneReport& rep);
nlohmann::json report_to_json(const SubspaceReport& rep);

// Shared accessors over the params variant.
const Field& params_field(const CodeParams& params);
u32 params_n(const CodeParams& params);
u32 params_s(const CodeParams& params);
u32 params_d(const CodeParams& params);
Codeword params_encode(const CodeParams& params, const Poly& message);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace listdec
