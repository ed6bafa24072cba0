#ifndef VERMA_JSON_IO_HPP
#define VERMA_JSON_IO_HPP

#include <json.hpp>

#include "verma/oracle.hpp"
#include "verma/series.hpp"
#include "verma/weyl.hpp"

namespace verma {

// Canonical JSON forms.  Objects serialize with sorted keys and exact
// "p/q" rationals, so equal values produce identical bytes.
//
//   series:      {"terms":[{"coeff":"p/q","exps":{"i,j":"r/s",...}},...],
//                 "frontier":{"1":"r/s"|"-inf",...},"exact":bool}
//   certificate: {"word":[...],"weight":["p/q",...],"polynomial":bool,
//                 "pde_zero":bool,"series":<series>}
//   verma vector:{"terms":[{"alpha":{"i,j":int,...},"coeff":"p/q"},...]}
//   oracle hit:  {"degree":[k...],"kernel_dim":int,"basis":[<verma vector>...]}

nlohmann::json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const SingularCertificate& c);
SingularCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json verma_vector_to_json(const VermaVector& v);
VermaVector verma_vector_from_json(const nlohmann::json& j, int rank);

nlohmann::json degree_hit_to_json(const DegreeHit& h);

} // namespace verma

#endif
