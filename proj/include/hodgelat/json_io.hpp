#pragma once

#include <string>

#include "json.hpp"

#include "hodgelat/genus.hpp"
#include "hodgelat/hodge.hpp"
#include "hodgelat/k3.hpp"

namespace hodgelat {

using Json = nlohmann::json;

// integers round-trip exactly: JSON numbers up to 2^53, decimal strings above
Json json_int(const Int& v);
Int int_from_json(const Json& j);

// rationals are "p/q" strings ("p" when integral); integer JSON numbers accepted
Json json_rat(const Rat& v);
Rat rat_from_json(const Json& j);

Json int_matrix_to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);
Json rat_matrix_to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const Json& j);

std::vector<Int> int_vector_from_json(const Json& j);

// {"name": optional, "gram": [[...]]}
Json lattice_to_json(const Lattice& l);
Json lattice_to_json_canonical(const Lattice& l);  // gram only; used inside certificates
Lattice lattice_from_json(const Json& j);

// {"lattice": ..., "endo_generator": [["p/q", ...]], "irreducible": b, "k3_type": b}
Json model_to_json(const HodgeLatticeModel& m);
Json model_to_json_canonical(const HodgeLatticeModel& m);
HodgeLatticeModel model_from_json(const Json& j);

// {"ambient": lattice doc (default LambdaK3), "ns_basis": [[...]],
//  "t_endo_generator": optional rational matrix}
K3SurfaceModel k3_model_from_json(const Json& j);
Json k3_model_to_json_canonical(const K3SurfaceModel& m);

Json inertia_to_json(const Inertia& s);
Json genus_to_json(const GenusInvariants& g);
Json isometry_verdict_to_json(const IsometryVerdict& v, int bound);
Json embed_verdict_to_json(const EmbedVerdict& v);

// single reader for files, with IoError/ParseError mapping
Json load_json_file(const std::string& path);

}  // namespace hodgelat
