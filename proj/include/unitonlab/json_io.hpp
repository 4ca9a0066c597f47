#ifndef UNITONLAB_JSON_IO_HPP_
#define UNITONLAB_JSON_IO_HPP_

#include <json.hpp>

#include "unitonlab/circle.hpp"
#include "unitonlab/loopmat.hpp"

namespace unitonlab {

using Json = nlohmann::ordered_json;

// Wire formats:
//   GaussRational  {"re":"p/q","im":"p/q"}
//   BiPoly         [{"i":int,"j":int,"c":GaussRational}, ...]
//   RatFunc        {"num":BiPoly,"den":BiPoly}
//   MatRF          {"n":int,"rows":[[RatFunc,...],...]}
//   LoopMat        {"n":int,"terms":[{"k":int,"matrix":MatRF},...]}
//   CircleSamples  {"n":int,"m":int,"values":[[[ [re,im],... ],...],...]}

Json to_json(const GaussRational& v);
Json to_json(const BiPoly& v);
Json to_json(const RatFunc& v);
Json to_json(const MatRF& v);
Json to_json(const LoopMat& v);
Json to_json(const CircleSamples& v);

GaussRational gauss_rational_from_json(const Json& j);
BiPoly bipoly_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
MatRF matrf_from_json(const Json& j);
LoopMat loopmat_from_json(const Json& j);
CircleSamples circle_samples_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// FNV-1a 64-bit digest of a file's bytes, hex-encoded (report provenance).
std::string file_digest(const std::string& path);
std::string string_digest(const std::string& bytes);

}  // namespace unitonlab

#endif
