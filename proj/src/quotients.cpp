#include "orelt/quotients.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "orelt/abelian.hpp"

namespace orelt {

Perm identityPerm(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm composePerms(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

int permOrder(const Perm& p) {
  int order = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

bool isIdentity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Perm FiniteQuotientHom::imageOf(const Word& w) const {
  Perm out = identityPerm(degree);
  for (Letter l : w.letters()) {
    const Perm& g = images[generatorOf(l) - 1];
    if (l > 0) {
      out = composePerms(out, g);
    } else {
      Perm inv(degree);
      for (int i = 0; i < degree; ++i) inv[g[i]] = i;
      out = composePerms(out, inv);
    }
  }
  return out;
}

bool FiniteQuotientHom::satisfies(const Presentation& p) const {
  for (const Word& r : p.relators) {
    if (!isIdentity(imageOf(r))) return false;
  }
  return true;
}

void forEachHom(const Presentation& p, int degree,
                const std::function<bool(const FiniteQuotientHom&)>& visit) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  std::vector<Perm> all;
  Perm perm = identityPerm(degree);
  do {
    all.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  FiniteQuotientHom hom;
  hom.degree = degree;
  hom.images.assign(p.rank, all.front());

  // Odometer over image tuples, generator 1 most significant, so the
  // emitted sequence is lexicographic and reproducible.
  std::vector<std::size_t> idx(p.rank, 0);
  for (;;) {
    for (int g = 0; g < p.rank; ++g) hom.images[g] = all[idx[g]];
    if (hom.satisfies(p)) {
      if (!visit(hom)) return;
    }
    int pos = p.rank - 1;
    while (pos >= 0) {
      if (++idx[pos] < all.size()) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) return;
  }
}

std::vector<FiniteQuotientHom> enumerateHoms(const Presentation& p, int degree,
                                             int degreeCap) {
  if (degree > degreeCap) {
    throw std::runtime_error("quotient degree " + std::to_string(degree) +
                             " exceeds the cap of " + std::to_string(degreeCap));
  }
  std::vector<FiniteQuotientHom> out;
  forEachHom(p, degree, [&](const FiniteQuotientHom& hom) {
    out.push_back(hom);
    return true;
  });
  return out;
}

NontrivialityVerdict certifyNontrivial(const Presentation& p, const Word& w,
                                       int maxDegree, int degreeCap) {
  NontrivialityVerdict verdict;
  if (w.empty()) return verdict;  // the identity: no witness can exist
  maxDegree = std::min(maxDegree, degreeCap);
  for (int degree = 2; degree <= maxDegree; ++degree) {
    verdict.maxDegreeSearched = degree;
    forEachHom(p, degree, [&](const FiniteQuotientHom& hom) {
      if (!isIdentity(hom.imageOf(w))) {
        verdict.status = Status::ProvenTrue;
        verdict.witness = hom;
        return false;
      }
      return true;
    });
    if (verdict.status == Status::ProvenTrue) break;
  }
  return verdict;
}

OrderLowerBoundVerdict certifyOrderLowerBound(const Presentation& p, const Word& w,
                                              int d, int maxDegree, int degreeCap) {
  OrderLowerBoundVerdict verdict;
  verdict.bound = d;
  if (d <= 1) {  // every element has order >= 1
    verdict.status = Status::ProvenTrue;
    return verdict;
  }
  maxDegree = std::min(maxDegree, degreeCap);

  std::vector<bool> excluded(d, false);  // index e, 1..d-1
  int remaining = d - 1;

  for (int e = 1; e < d; ++e) {
    if (nontrivialInAbelianization(p, w.pow(e))) {
      OrderExclusion ex;
      ex.excludedPower = e;
      ex.byAbelianization = true;
      verdict.exclusions.push_back(ex);
      excluded[e] = true;
      --remaining;
    }
  }

  for (int degree = 2; degree <= maxDegree && remaining > 0; ++degree) {
    verdict.maxDegreeSearched = degree;
    forEachHom(p, degree, [&](const FiniteQuotientHom& hom) {
      int order = permOrder(hom.imageOf(w));
      for (int e = 1; e < d; ++e) {
        if (!excluded[e] && e % order != 0) {
          // image of w^e is nontrivial since ord(image) does not divide e
          OrderExclusion ex;
          ex.excludedPower = e;
          ex.hom = hom;
          verdict.exclusions.push_back(ex);
          excluded[e] = true;
          --remaining;
        }
      }
      return remaining > 0;
    });
  }

  if (remaining == 0) {
    std::sort(verdict.exclusions.begin(), verdict.exclusions.end(),
              [](const OrderExclusion& a, const OrderExclusion& b) {
                return a.excludedPower < b.excludedPower;
              });
    verdict.status = Status::ProvenTrue;
  }
  return verdict;
}

}  // namespace orelt
