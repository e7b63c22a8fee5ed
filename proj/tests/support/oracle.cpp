#include "support/oracle.hpp"

#include <stdexcept>

#include "coxeter/errors.hpp"

namespace oracle {

namespace {

using BigInt = boost::multiprecision::cpp_int;

int degree(const Poly& p) {
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d) {
    if (p[static_cast<size_t>(d)] != 0) return d;
  }
  return -1;  // zero polynomial
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly out;
  for (size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<int>(k));
  trim(out);
  return out;
}

// Remainder of a by b (b nonzero).
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  int db = degree(b);
  if (db < 0) throw std::invalid_argument("division by zero polynomial");
  while (degree(a) >= db) {
    int da = degree(a);
    BigRat factor = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
    for (int k = 0; k <= db; ++k) {
      a[static_cast<size_t>(da - db + k)] -= factor * b[static_cast<size_t>(k)];
    }
    a[static_cast<size_t>(da)] = 0;
    trim(a);
  }
  return a;
}

// Divides a by b exactly; throws if the division leaves a remainder.
Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  int db = degree(b);
  int da = degree(a);
  if (da < db) throw std::invalid_argument("inexact polynomial division");
  Poly q(static_cast<size_t>(da - db + 1), BigRat(0));
  while (degree(a) >= db) {
    int d = degree(a);
    BigRat factor = a[static_cast<size_t>(d)] / b[static_cast<size_t>(db)];
    q[static_cast<size_t>(d - db)] = factor;
    for (int k = 0; k <= db; ++k) {
      a[static_cast<size_t>(d - db + k)] -= factor * b[static_cast<size_t>(k)];
    }
    trim(a);
  }
  if (degree(a) >= 0) throw std::invalid_argument("inexact polynomial division");
  return q;
}

void make_monic(Poly& p) {
  int d = degree(p);
  if (d < 0) return;
  BigRat lead = p[static_cast<size_t>(d)];
  for (BigRat& c : p) c /= lead;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (degree(b) >= 0) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

int sign_of(const BigRat& x) { return x.sign(); }

// Sturm chain sign variations at x.
int variations_at(const std::vector<Poly>& chain, const BigRat& x) {
  int count = 0;
  int prev = 0;
  for (const Poly& f : chain) {
    int s = sign_of(eval(f, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = derivative(p);
  if (degree(d) >= 0) chain.push_back(d);
  while (chain.size() >= 2) {
    Poly r = poly_mod(chain[chain.size() - 2], chain.back());
    trim(r);
    if (degree(r) < 0) break;
    for (BigRat& c : r) c = -c;
    // Scale by a positive factor only; a sign flip would break the chain.
    BigRat lead = r[static_cast<size_t>(degree(r))];
    BigRat scale = lead >= 0 ? lead : BigRat(-lead);
    for (BigRat& c : r) c /= scale;
    chain.push_back(std::move(r));
  }
  return chain;
}

// Distinct roots of p in (a, b]; requires p(a) != 0.
int distinct_roots_in(const Poly& p, const BigRat& a, const BigRat& b) {
  std::vector<Poly> chain = sturm_chain(p);
  return variations_at(chain, a) - variations_at(chain, b);
}

// Strictly-greater-than-all-roots bound: 1 + max |coefficient| of the monic
// polynomial (Cauchy bound).
BigRat root_bound(const Poly& p) {
  Poly q = p;
  make_monic(q);
  BigRat best(0);
  for (const BigRat& c : q) {
    BigRat a = c >= 0 ? c : BigRat(-c);
    if (a > best) best = a;
  }
  return best + 1;
}

}  // namespace

Poly char_poly(const std::vector<long long>& m, int n) {
  if (static_cast<int>(m.size()) != n * n) throw std::invalid_argument("matrix size mismatch");
  // Faddeev-LeVerrier: M_0 = 0, c_n = 1;
  //   M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  std::vector<BigRat> coeff(static_cast<size_t>(n) + 1, BigRat(0));
  coeff[static_cast<size_t>(n)] = 1;
  std::vector<BigInt> a(m.size());
  for (size_t i = 0; i < m.size(); ++i) a[i] = m[i];
  std::vector<BigRat> work(m.size(), BigRat(0));  // M_{k-1}
  for (int k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{n-k+1} I
    std::vector<BigRat> next(m.size(), BigRat(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigRat sum = 0;
        for (int l = 0; l < n; ++l) {
          if (a[static_cast<size_t>(i) * n + l] != 0) {
            sum += BigRat(a[static_cast<size_t>(i) * n + l]) * work[static_cast<size_t>(l) * n + j];
          }
        }
        if (i == j) sum += coeff[static_cast<size_t>(n - k + 1)];
        next[static_cast<size_t>(i) * n + j] = sum;
      }
    }
    // c_{n-k} = -tr(A M_k) / k
    BigRat trace = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) {
        if (a[static_cast<size_t>(i) * n + l] != 0) {
          trace += BigRat(a[static_cast<size_t>(i) * n + l]) * next[static_cast<size_t>(l) * n + i];
        }
      }
    }
    coeff[static_cast<size_t>(n - k)] = -trace / k;
    work = std::move(next);
  }
  return Poly(coeff.begin(), coeff.end());
}

std::vector<long long> int_adjacency(const coxeter::Graph& g) {
  if (!g.integer_adjacency()) {
    throw coxeter::DomainError("oracle needs bonds in {2, 3, inf}");
  }
  int n = g.size();
  std::vector<long long> a(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (const auto& [key, label] : g.edges()) {
    long long entry = label.infinite() ? 2 : 1;
    a[static_cast<size_t>(key.first) * n + key.second] = entry;
    a[static_cast<size_t>(key.second) * n + key.first] = entry;
  }
  return a;
}

BigRat eval(const Poly& p, const BigRat& x) {
  BigRat out = 0;
  for (size_t k = p.size(); k-- > 0;) out = out * x + p[k];
  return out;
}

int root_multiplicity(const Poly& p, const BigRat& x0) {
  Poly linear = {-x0, BigRat(1)};
  Poly rest = p;
  int mult = 0;
  while (degree(rest) >= 1 && eval(rest, x0) == 0) {
    rest = poly_div_exact(rest, linear);
    ++mult;
  }
  return mult;
}

int roots_above(const Poly& p, const BigRat& x0) {
  int r = root_multiplicity(p, x0);
  Poly reduced = p;
  Poly linear = {-x0, BigRat(1)};
  for (int i = 0; i < r; ++i) reduced = poly_div_exact(reduced, linear);

  // Sum distinct-root counts over the gcd chain: a root of multiplicity m
  // appears in the first m chain members.
  BigRat bound = root_bound(p);
  int total = 0;
  Poly current = reduced;
  while (degree(current) >= 1) {
    total += distinct_roots_in(current, x0, bound);
    Poly g = poly_gcd(current, derivative(current));
    if (degree(g) < 1) break;
    current = std::move(g);
  }
  return total;
}

bool divides(const Poly& p, const Poly& divisor) {
  try {
    poly_div_exact(p, divisor);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

coxeter::Signature signature(const coxeter::Graph& g) {
  Poly p = char_poly(int_adjacency(g), g.size());
  coxeter::Signature sig;
  sig.exact = true;
  sig.r = root_multiplicity(p, 2);
  sig.q = roots_above(p, 2);
  sig.p = g.size() - sig.q - sig.r;
  return sig;
}

}  // namespace oracle
