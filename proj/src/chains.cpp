#include "gaudin/chains.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gaudin {

std::string LabelChain::str() const {
  if (steps.empty()) return "()";
  std::ostringstream os;
  for (const LabelStep& step : steps) os << "(" << step.m << "," << step.s << ")";
  return os.str();
}

bool chain_valid(const LabelChain& chain) {
  if (chain.sites < 1) return false;
  int m_prev = 0;
  int s_prev = 0;
  for (const LabelStep& step : chain.steps) {
    const int dm = step.m - m_prev;
    if (dm != 1 && dm != 2) return false;
    if (step.s <= s_prev) return false;
    if (step.s <= m_prev + 1) return false;
    if (step.s < step.m || step.s > chain.sites) return false;
    m_prev = step.m;
    s_prev = step.s;
  }
  return true;
}

bool chain_less(const LabelChain& a, const LabelChain& b) {
  const auto flatten = [](const LabelChain& c) {
    std::vector<int> flat;
    flat.reserve(2 * c.steps.size());
    for (const LabelStep& step : c.steps) {
      flat.push_back(step.m);
      flat.push_back(step.s);
    }
    return flat;
  };
  return flatten(a) < flatten(b);
}

namespace {

void extend(LabelChain& chain, int m_prev, int s_prev, std::vector<LabelChain>& out) {
  out.push_back(chain);
  // children in (m, s) order keeps the flattened sequence lexicographic
  for (int dm = 1; dm <= 2; ++dm) {
    const int m = m_prev + dm;
    const int s_min = std::max({s_prev + 1, m_prev + 2, m});
    for (int s = s_min; s <= chain.sites; ++s) {
      chain.steps.push_back({m, s});
      extend(chain, m, s, out);
      chain.steps.pop_back();
    }
  }
}

}  // namespace

std::vector<LabelChain> enumerate_label_chains(int sites) {
  if (sites < 1) throw std::invalid_argument("enumerate_label_chains: sites must be >= 1");
  std::vector<LabelChain> out;
  LabelChain chain;
  chain.sites = sites;
  extend(chain, 0, 0, out);
  return out;
}

std::map<int, mpz_class> irrep_counts(int sites) {
  if (sites < 1) throw std::invalid_argument("irrep_counts: sites must be >= 1");
  std::map<int, mpz_class> counts{{1, 1}};  // single site: one spin-1/2 copy
  for (int n = 2; n <= sites; ++n) {
    std::map<int, mpz_class> next;
    for (const auto& [twice_spin, count] : counts) {
      if (twice_spin == 0) {
        next[1] += count;
      } else {
        next[twice_spin - 1] += count;
        next[twice_spin] += count;
        next[twice_spin + 1] += count;
      }
    }
    counts = std::move(next);
  }
  return counts;
}

mpz_class pow3(int n) {
  if (n < 0) throw std::invalid_argument("pow3: negative exponent");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n));
  return p;
}

}  // namespace gaudin
