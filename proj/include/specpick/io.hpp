#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "specpick/conditions.hpp"
#include "specpick/correspondence.hpp"
#include "specpick/funcalc.hpp"

namespace specpick::io {

using Json = nlohmann::ordered_json;

/// Input that does not match the wire schema; `path` locates the offending node.
class SchemaError : public InvalidArgument {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : InvalidArgument(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_string(std::string_view bytes);

Json parse_text(const std::string& text);

/// [re, im] or a bare real number.
Cplx parse_complex(const Json& j, const std::string& path);
/// Row-major rows of complex entries.
Matrix parse_matrix(const Json& j, const std::string& path);
/// {"blocks": [{"lambda": [re, im], "sizes": [...]}]}
JordanSpec parse_jordan(const Json& j, const std::string& path);
/// {"node": z, "target": matrix or JordanSpec}; the node must lie in the open disc.
DataPoint parse_point(const Json& j, const std::string& path);
/// {"points": [...]} with exactly `count` entries.
std::vector<DataPoint> parse_points(const Json& j, std::size_t count, const std::string& path);
/// {"kind": "identity" | "polynomial" | "blaschke" | "scaled" | "composed", ...}
HoloFn parse_function(const Json& j, const std::string& path);
/// {"degree": n, "coeffs": [[c_0, c_1, ...], ...], "domain": {"center": z, "radius": R}}
Correspondence parse_correspondence(const Json& j, const std::string& path);

Json to_json(Cplx z);
Json to_json(const std::vector<Cplx>& v);
Json to_json(const Matrix& a);
Json to_json(const JordanSpec& s);
Json to_json(const SpectralData& d);
Json to_json(const RootMultiset& r);
Json to_json(const BlaschkeProduct& b);
Json to_json(const DataPoint& p);
Json to_json(const ThreePointData& d);
Json to_json(const Correspondence& g);
Json to_json(const TwoPointVerdict& v);
Json to_json(const ThreePointVerdict& v);
Json to_json(const BaribeauKamaraVerdict& v);
Json to_json(const ProperCertificate& c);
Json to_json(const Tolerances& t);

}  // namespace specpick::io
