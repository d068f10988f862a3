#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pgt {

inline constexpr const char* kToolVersion = "pgt 1.0.0";
inline constexpr const char* kReportSchema = "pgt-report/1";

using i64 = std::int64_t;

// Every failure mode carries a stable code so callers (and the CLI exit-code
// mapping) can dispatch without parsing prose.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, const std::string& code, const std::string& what) {
  if (!ok) fail(code, what);
}

// Size ceilings for the exhaustive paths.  Everything past a ceiling either
// switches to a documented sampling strategy or reports CapExceeded; nothing
// silently truncates.
struct Caps {
  i64 max_table_order = 20000;        // table model, permutation closure, expansion
  i64 assoc_exhaustive_limit = 512;   // all triples up to here, sampled above
  i64 assoc_samples = 1000000;
  int max_ext_degree = 8;
  i64 field_exhaustive_limit = 729;   // field axiom sweeps
  i64 semifield_limit = 2187;         // zero-divisor / identity sweeps
  i64 maxabel_table_limit = 2000;     // table-model maximal-abelian search
  i64 maxabel_bilinear_limit = 19683; // p^d ceiling for isotropic backtracking
  i64 openq_exhaustive_checks = 3000000;
  int openq_samples = 300;            // per tuple length, above the exhaustive cap
  int openq_max_tuple_len = 3;
};

inline Caps& caps() {
  static Caps c;
  return c;
}

inline i64 ipow(i64 base, int exp) {
  i64 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// exponent e with p^e == n, or -1 when n is not a power of p
inline int plog(i64 p, i64 n) {
  if (n < 1) return -1;
  int e = 0;
  while (n > 1) {
    if (n % p != 0) return -1;
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace pgt
