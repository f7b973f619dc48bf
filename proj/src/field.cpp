#include "eliahou/field.hpp"

#include "eliahou/error.hpp"

namespace eliahou {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::NotCombinatoriallyFinite: return "NotCombinatoriallyFinite";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::NotASyzygy: return "NotASyzygy";
    case ErrorKind::LiftFailed: return "LiftFailed";
  }
  return "Unknown";
}

Field Field::prime(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw Error(ErrorKind::InvalidInput, "field characteristic " + p.get_str() + " is not prime");
  }
  Field f;
  f.characteristic_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "rational" || text == "Q") return rational();
  const std::string prefix = "prime:";
  if (text.rfind(prefix, 0) == 0) {
    mpz_class p;
    if (p.set_str(text.substr(prefix.size()), 10) != 0) {
      throw Error(ErrorKind::InvalidInput, "bad prime in field spec '" + text + "'");
    }
    return prime(p);
  }
  throw Error(ErrorKind::InvalidInput, "unknown field '" + text + "' (expected rational or prime:<p>)");
}

Scalar Field::reduce(const Scalar& x) const {
  if (is_rational()) return x;
  mpz_class den_inv;
  mpz_class den = x.get_den() % characteristic_;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), characteristic_.get_mpz_t()) == 0) {
    throw Error(ErrorKind::InvalidInput, "denominator not invertible mod " + characteristic_.get_str());
  }
  mpz_class r = (x.get_num() * den_inv) % characteristic_;
  if (r < 0) r += characteristic_;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero in field");
  if (is_rational()) return 1 / a;
  mpz_class r;
  mpz_class num = a.get_num();
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), characteristic_.get_mpz_t());
  return Scalar(r);
}

std::string Field::name() const {
  return is_rational() ? "rational" : "prime:" + characteristic_.get_str();
}

std::string scalar_to_string(const Scalar& x) { return x.get_str(); }

Scalar scalar_from_string(const std::string& text) {
  Scalar x;
  if (text.empty() || x.set_str(text, 10) != 0 || x.get_den() == 0) {
    throw Error(ErrorKind::InvalidInput, "bad rational '" + text + "'");
  }
  x.canonicalize();
  return x;
}

}  // namespace eliahou
