#include "knotcert/numeric.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "knotcert/errors.hpp"

namespace knotcert {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(Errc::MalformedToken, "empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational q(s);
    q.canonicalize();
    if (q.get_den() == 0) fail(Errc::MalformedToken, "zero denominator in '" + text + "'");
    return q;
  }

  // decimal with optional exponent: [-]ddd[.ddd][e[-]dd]
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::strtol(s.c_str() + epos + 1, nullptr, 10);
    s = s.substr(0, epos);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(s.size() - dot - 1);
    s.erase(dot, 1);
  }
  if (s.empty() || s == "-" || s == "+") fail(Errc::MalformedToken, "bad rational '" + text + "'");
  for (size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      fail(Errc::MalformedToken, "bad rational '" + text + "'");

  Integer mant(s);
  Rational q(mant);
  Integer ten = 10;
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(exp10)));
  if (exp10 >= 0)
    q *= Rational(scale);
  else
    q /= Rational(scale);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational rational_binomial(const Rational& q, long k) {
  if (k < 0) return 0;
  Rational num = 1;
  for (long i = 0; i < k; ++i) num *= q - i;
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  Rational r = num / Rational(fact);
  r.canonicalize();
  return r;
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return 1;
  bool inv = exp < 0;
  unsigned long e = static_cast<unsigned long>(inv ? -exp : exp);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  if (inv) {
    if (r == 0) throw std::domain_error("pow_rational: zero base with negative exponent");
    r = 1 / r;
  }
  return r;
}

Integer isqrt_floor(const Integer& z) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

SymmetricSignature symmetric_signature(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  SymmetricSignature sig;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && m[i][i] != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      // look for an off-diagonal entry among the live rows
      int a = -1, b = -1;
      for (int i = 0; i < n && a < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (done[j]) continue;
          if (m[i][j] != 0) {
            a = i;
            b = j;
            break;
          }
        }
      }
      if (a < 0) {
        for (int i = 0; i < n; ++i)
          if (!done[i]) ++sig.zeros;
        return sig;
      }
      // congruence: row/col a += row/col b, making m[a][a] = 2*m[a][b] != 0
      for (int j = 0; j < n; ++j)
        if (!done[j]) m[a][j] += m[b][j];
      for (int i = 0; i < n; ++i)
        if (!done[i]) m[i][a] += m[i][b];
      p = a;
    }
    Rational pivot = m[p][p];
    if (pivot > 0)
      ++sig.positives;
    else
      ++sig.negatives;
    done[p] = true;
    for (int i = 0; i < n; ++i) {
      if (done[i] || m[i][p] == 0) continue;
      Rational f = m[i][p] / pivot;
      for (int j = 0; j < n; ++j)
        if (!done[j]) m[i][j] -= f * m[p][j];
      m[i][p] = 0;
      m[p][i] = 0;
    }
  }
  return sig;
}

Integer spanning_tree_count(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 1) return 1;
  std::vector<std::vector<Integer>> lap(n, std::vector<Integer>(n, 0));
  for (auto [u, v] : edges) {
    if (u == v) continue;  // loop edges never enter a spanning tree
    lap[u][u] += 1;
    lap[v][v] += 1;
    lap[u][v] -= 1;
    lap[v][u] -= 1;
  }
  std::vector<std::vector<Integer>> minor(n - 1, std::vector<Integer>(n - 1));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = lap[i][j];
  Integer det = bareiss_determinant(std::move(minor));
  return det < 0 ? Integer(-det) : det;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedToken: return "MalformedToken";
    case Errc::LabelCountError: return "LabelCountError";
    case Errc::DisconnectedTrace: return "DisconnectedTrace";
    case Errc::NotAKnot: return "NotAKnot";
    case Errc::NonPlanarInput: return "NonPlanarInput";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::MethodDisagreement: return "MethodDisagreement";
    case Errc::NotQuarterInteger: return "NotQuarterInteger";
    case Errc::ZeroV3: return "ZeroV3";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotReduced: return "NotReduced";
    case Errc::NotAlternating: return "NotAlternating";
    case Errc::DisconnectedInput: return "DisconnectedInput";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::LemmaContradiction: return "LemmaContradiction";
    case Errc::ViolationFound: return "ViolationFound";
    case Errc::IoError: return "IoError";
    case Errc::MalformedJson: return "MalformedJson";
  }
  return "UnknownError";
}

}  // namespace knotcert
