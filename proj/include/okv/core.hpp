#ifndef OKV_CORE_HPP
#define OKV_CORE_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace okv {

// Exact scalar field used everywhere. GMP-backed rationals are always kept
// in lowest terms with positive denominator by the backend.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define OKV_DEFINE_ERROR(Name)                                                \
    struct Name : Error {                                                     \
        using Error::Error;                                                   \
    }

OKV_DEFINE_ERROR(EmptyHull);
OKV_DEFINE_ERROR(DimensionMismatch);
OKV_DEFINE_ERROR(InvalidScale);
OKV_DEFINE_ERROR(ArityMismatch);
OKV_DEFINE_ERROR(DegenerateBody);
OKV_DEFINE_ERROR(Unbounded);
OKV_DEFINE_ERROR(EmptyLinearSystem);
OKV_DEFINE_ERROR(NotUnimodular);
OKV_DEFINE_ERROR(ZeroSection);
OKV_DEFINE_ERROR(FlagDegeneracy);
OKV_DEFINE_ERROR(UnsupportedFlag);
OKV_DEFINE_ERROR(BackendMismatch);
OKV_DEFINE_ERROR(NoSections);
OKV_DEFINE_ERROR(InvalidMetric);
OKV_DEFINE_ERROR(ZeroVolume);
OKV_DEFINE_ERROR(NotNef);
OKV_DEFINE_ERROR(FanMismatch);
OKV_DEFINE_ERROR(InvalidFan);
OKV_DEFINE_ERROR(OutOfPolytope);
OKV_DEFINE_ERROR(IncompleteTable);
OKV_DEFINE_ERROR(SchemaError);

#undef OKV_DEFINE_ERROR

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sgn(const Rat& q) { return q.sign(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// floor(p/q) for exact rationals
inline Int rat_floor(const Rat& q) {
    Int n = num(q), d = den(q);
    Int r = n / d;
    if (n < 0 && r * d != n) --r;
    return r;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(Rat(-q)); }

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

// Parses "p", "p/q" or plain decimal strings like "-3.25".
Rat parse_rat(const std::string& s);

// Canonical "p/q" (or "p" when q==1) rendering with decimal-string integers.
std::string rat_str(const Rat& q);

// Smallest q = p / 2^30 with q >= sqrt(s); s must be >= 0.  Used to replace
// irrational Euclidean norms by certified rational upper bounds.
Rat sqrt_upper_bound(const Rat& s);

} // namespace okv

#endif
