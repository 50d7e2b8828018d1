#ifndef ROOTOIDLAB_IO_HPP
#define ROOTOIDLAB_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "rootoidlab/arrangement.hpp"
#include "rootoidlab/cat.hpp"
#include "rootoidlab/coxeter.hpp"
#include "rootoidlab/prd.hpp"
#include "rootoidlab/signed.hpp"

namespace rootoidlab {

// Structure files are UTF-8 JSON documents discriminated by "kind":
// groupoid, protorootoid, signed, coxeter or arrangement. Serialization is
// canonical: keys and label lists sorted, so identical structures give
// identical bytes.

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

nlohmann::json groupoid_to_json(const Groupoid& G);
Groupoid groupoid_from_json(const nlohmann::json& j);

nlohmann::json protorootoid_to_json(const Protorootoid& P);
Protorootoid protorootoid_from_json(const nlohmann::json& j);

nlohmann::json signed_set_to_json(const SignedGroupoidSet& R);
SignedGroupoidSet signed_set_from_json(const nlohmann::json& j);

nlohmann::json coxeter_matrix_to_json(const CoxeterMatrix& M, std::optional<int> cutoff = std::nullopt);
std::pair<CoxeterMatrix, std::optional<int>> coxeter_matrix_from_json(const nlohmann::json& j);

nlohmann::json arrangement_to_json(const RationalArrangement& A);
RationalArrangement arrangement_from_json(const nlohmann::json& j);

// A protorootoid morphism relative to explicitly elaborated endpoints.
nlohmann::json prd_morphism_to_json(const Protorootoid& src, const Protorootoid& tgt, const PrdMorphism& f);
PrdMorphism prd_morphism_from_json(const Protorootoid& src, const Protorootoid& tgt, const nlohmann::json& j);

// Elaborate any structure file to a protorootoid: protorootoid files load
// directly; signed files pass through the orbit construction; coxeter and
// arrangement files run their builders; a bare groupoid receives the empty
// representation and the zero cocycle.
Protorootoid elaborate(const nlohmann::json& j, long long budget);

std::string dump_canonical(const nlohmann::json& j);

// Exports: Hasse diagram of the weak order at an object as a DOT digraph
// (nodes carry a witness morphism and the cocycle value), or the cocycle
// table as TSV.
std::string export_weak_order_dot(const Protorootoid& P, int object);
std::string export_root_table_tsv(const Protorootoid& P);
std::string export_root_table_tsv(const CoxeterBundle& B);  // works for ball enumerations

}  // namespace rootoidlab

#endif
