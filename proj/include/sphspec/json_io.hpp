#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sphspec/branching.hpp"
#include "sphspec/hyperboloid.hpp"
#include "sphspec/sphere.hpp"
#include "sphspec/verify.hpp"

namespace sphspec::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

// Rationals as canonical "p/q" strings, weights as arrays of them.
Json rational(const Rational& r);
Json weight(const Weight& w);

// Each record starts with schema_version and type.
Json spectrum_entry(const SphereRealization& r, const SpectrumEntry& e);
Json eigenvalue(const SphereRealization& r, const Rational& ev, std::int64_t multiplicity);
Json irrep_decomp(const IrrepDecomp& d, const std::string& source, std::int64_t level);
Json discrete_series(const DiscreteSeriesParam& d);
Json range_class(const DiscreteSeriesParam& d, const RangeClass& c);
Json ktype_sum(const DiscreteSeriesParam& d, const KTypeSum& k);
Json consistency(HypKind family, int p, int q, std::int64_t ell, std::int64_t cutoff, const ConsistencyReport& r);
Json assertion(const std::string& suite, const Assertion& a);
Json verify_summary(const VerifyReport& r);

enum class Format { json, tsv };

// Buffers records and writes them as JSON lines, or as TSV with a header
// row whenever the set of fields changes.
class Writer {
 public:
  explicit Writer(Format f) : format_(f) {}
  void add(Json record) { records_.push_back(std::move(record)); }
  void write(std::ostream& os) const;

 private:
  Format format_;
  std::vector<Json> records_;
};

}  // namespace sphspec::io
