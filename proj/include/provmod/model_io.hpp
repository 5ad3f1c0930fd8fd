#pragma once

#include <memory>
#include <string>
#include <variant>

#include "json.hpp"

#include "provmod/glp.hpp"
#include "provmod/kripke.hpp"
#include "provmod/provability.hpp"
#include "provmod/theory.hpp"

namespace provmod {

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;
using Document = std::variant<KripkeModel, VeltmanModel, PModel, std::shared_ptr<PolyModel>>;

// Theory from a descriptor. kripke_world needs the host model; cone needs the poly relations.
Theory theory_from_descriptor(const Json& d, Lang lang, std::shared_ptr<const KripkeModel> host = nullptr);

Document load_document(const Json& j);
Document load_document_file(const std::string& path);

Json save_kripke(const KripkeModel& k);
Json save_veltman(const VeltmanModel& v);
// Generated models are saved as their seeds plus "certificate": "generated" and regenerate on load.
Json save_pre_model(const ProvabilityModel& p);
Json save_poly(const PolyModel& p);
Json save_unravelled(const Unravelled& u);
Json save_document(const Document& d);

std::string document_dot(const Document& d);

}  // namespace provmod
