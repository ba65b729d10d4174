#include "moduli/torsion_tables.hpp"

#include <algorithm>

#include "moduli/error.hpp"

namespace moduli {

namespace {

void canonicalize(std::vector<std::uint64_t>& f) {
  std::erase(f, 1);
  std::sort(f.begin(), f.end());
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

constexpr std::string_view kLensOddSource =
    "ko_7(BZ/p) for odd p: Atiyah-Hirzebruch spectral sequence with ko[1/2] a summand of "
    "ku[1/2]; Bruner-Greenlees, The Connective K-Theory of Finite Groups, Remark 3.4.6";
constexpr std::string_view kLensTwoSource =
    "ko_7(BZ/2): Bruner-Greenlees, Connective Real K-Theory of Finite Groups, Example 7.3.1";
constexpr std::string_view kQ8Source =
    "ko_7(BQ_8): Bruner-Greenlees, Connective Real K-Theory of Finite Groups, p. 138";
constexpr std::string_view kIcosahedralSource =
    "ko_7(BSL_2(F_5)): transfer to the Sylow subgroups Z/3, Z/5 and Q_8, with the "
    "Mitchell-Priddy splitting of BQ_8 at p = 2";

}  // namespace

FinAbGroup::FinAbGroup(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
  canonicalize(factors_);
}

FinAbGroup FinAbGroup::power(std::uint64_t k, unsigned copies) {
  return FinAbGroup(std::vector<std::uint64_t>(copies, k));
}

bool FinAbGroup::is_finite() const {
  return std::none_of(factors_.begin(), factors_.end(), [](auto k) { return k == 0; });
}

std::optional<Integer> FinAbGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (auto k : factors_) n *= Integer(std::to_string(k));
  return n;
}

FinAbGroup FinAbGroup::primary_decomposition() const {
  std::vector<std::uint64_t> out;
  for (auto k : factors_) {
    if (k == 0) {
      out.push_back(0);
      continue;
    }
    for (std::uint64_t q = 2; q * q <= k; ++q) {
      std::uint64_t pk = 1;
      while (k % q == 0) {
        k /= q;
        pk *= q;
      }
      if (pk > 1) out.push_back(pk);
    }
    if (k > 1) out.push_back(k);
  }
  return FinAbGroup(std::move(out));
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<std::uint64_t> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return FinAbGroup(std::move(f));
}

bool isomorphic(const FinAbGroup& a, const FinAbGroup& b) {
  return a.primary_decomposition() == b.primary_decomposition();
}

std::string to_string(const FinAbGroup& g) {
  if (g.is_trivial()) return "0";
  std::string out;
  const auto& f = g.factors();
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    const std::size_t copies = j - i;
    std::string term = f[i] == 0 ? "Z" : "Z/" + std::to_string(f[i]);
    if (copies > 1) term = (f[i] == 0 ? term : "(" + term + ")") + "^" + std::to_string(copies);
    if (!out.empty()) out += " + ";
    out += term;
    i = j;
  }
  return out;
}

FinAbGroup mt_theta_pi1(int n) {
  switch (n) {
    case 1: return FinAbGroup();
    case 2: return FinAbGroup::power(2, 2);
    case 3: return FinAbGroup();
    case 4: return FinAbGroup::power(2, 4);
    case 5: return FinAbGroup::cyclic(4);
    case 6: return FinAbGroup({2, 2, 3});
    case 7: return FinAbGroup::cyclic(2);
    default:
      throw Error(ErrorKind::invalid_argument,
                  "pi_1(MT theta_n) is tabulated for 1 <= n <= 7, got " + std::to_string(n));
  }
}

std::vector<std::string> gamma_ab_examples() { return {"lens", "quaternion-Q8", "poincare-sphere"}; }

GammaAbResult gamma_ab(std::string_view example, std::optional<std::uint64_t> p,
                       std::optional<Integer> genus) {
  GammaAbResult r;
  if (example == "lens") {
    if (!p) throw Error(ErrorKind::invalid_argument, "lens example needs a prime p");
    if (!is_prime(*p))
      throw Error(ErrorKind::invalid_argument, "p = " + std::to_string(*p) + " is not prime");
    r.example = "lens";
    r.g_ab = FinAbGroup::cyclic(*p);
    if (*p == 2) {
      r.ko7 = FinAbGroup::cyclic(4);
      r.citation = kLensTwoSource;
    } else if (*p == 3) {
      r.ko7 = FinAbGroup::cyclic(9);
      r.citation = kLensOddSource;
    } else {
      r.ko7 = FinAbGroup::power(*p, 2);
      r.citation = kLensOddSource;
    }
  } else if (example == "quaternion-Q8") {
    if (p) throw Error(ErrorKind::invalid_argument, "--p applies to the lens example only");
    r.example = "quaternion-Q8";
    r.g_ab = FinAbGroup::power(2, 2);
    r.ko7 = FinAbGroup({4, 4, 64});
    r.citation = kQ8Source;
  } else if (example == "poincare-sphere") {
    if (p) throw Error(ErrorKind::invalid_argument, "--p applies to the lens example only");
    r.example = "poincare-sphere";
    r.g_ab = FinAbGroup();
    r.ko7 = FinAbGroup({5, 5, 9, 64});
    r.citation = kIcosahedralSource;
  } else {
    throw Error(ErrorKind::unknown_preset,
                "unknown example '" + std::string(example) +
                    "' (expected lens, quaternion-Q8 or poincare-sphere)");
  }
  // All three groups are finite, so the Hirsch length is 0.
  r.hirsch_length = 0;
  if (genus && *genus < 7 + r.hirsch_length)
    throw Error(ErrorKind::invalid_argument,
                "the splitting needs genus >= " + std::to_string(7 + r.hirsch_length) +
                    ", got " + genus->get_str());
  r.group = direct_sum(r.g_ab, r.ko7);
  return r;
}

}  // namespace moduli
