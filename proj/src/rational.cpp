#include "sonc/rational.hpp"

namespace sonc {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rat::parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rat(q);
}

std::string Rat::str() const {
  return v_.get_str();
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv && is_zero()) throw std::domain_error("Rat::pow: 0 to negative power");
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  mpq_class r = inv ? mpq_class(d, n) : mpq_class(n, d);
  r.canonicalize();
  return Rat(r);
}

bool Rat::nth_root(unsigned long k, Rat& out) const {
  if (k == 0) throw std::domain_error("Rat::nth_root: k = 0");
  if (k == 1) { out = *this; return true; }
  if (sign() < 0 && k % 2 == 0) return false;
  mpz_class n = v_.get_num(), d = v_.get_den();
  mpz_class rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k);
  int exact_d = mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k);
  if (!exact_n || !exact_d) return false;
  mpq_class r(rn, rd);
  r.canonicalize();
  out = Rat(r);
  return true;
}

std::string to_string(const Rat& r) { return r.str(); }

mpz_class common_denominator(const RatVec& v) {
  mpz_class l = 1;
  for (const Rat& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den().get_mpz_t());
  return l;
}

RatVec primitive_integer_form(const RatVec& v) {
  mpz_class l = common_denominator(v);
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  for (const Rat& r : v) {
    mpz_class z = r.num() * (l / r.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  RatVec out;
  out.reserve(v.size());
  for (const mpz_class& z : ints) out.push_back(g == 0 ? Rat(z) : Rat(mpz_class(z / g)));
  return out;
}

}  // namespace sonc
