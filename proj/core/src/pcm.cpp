#include "pcmgate/pcm.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "pcmgate/errors.hpp"

namespace pcmgate {

Pcm::Pcm(int n, std::vector<double> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ < 2) {
    throw ContractError("pcm: need at least two alternatives");
  }
  if (entries_.size() != static_cast<std::size_t>(n_) * n_) {
    throw ContractError("pcm: expected " + std::to_string(n_) + "x" + std::to_string(n_) +
                        " entries, got " + std::to_string(entries_.size()));
  }
  for (double v : entries_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("pcm: every entry must be a positive finite number");
    }
  }
  for (int i = 0; i < n_; ++i) {
    if (std::fabs(at(i, i) - 1.0) > kDiagonalTol) {
      throw FormatError("pcm: diagonal entry (" + std::to_string(i + 1) + "," +
                        std::to_string(i + 1) + ") must be 1");
    }
  }
}

void PerturbationConfig::validate() const {
  if (!(delta >= 0.0) || delta >= 1.0 || !std::isfinite(delta)) {
    throw DomainError("perturbation: delta must lie in [0, 1), got " + std::to_string(delta));
  }
}

std::size_t pattern_length(int n, bool half_matrix) {
  const auto pairs = static_cast<std::size_t>(n) * (n - 1);
  return half_matrix ? pairs / 2 : pairs;
}

SignPattern::SignPattern(std::vector<std::int8_t> genes) : genes_(std::move(genes)) {
  for (std::int8_t g : genes_) {
    if (g < -1 || g > 1) {
      throw ContractError("sign pattern: genes must be -1, 0 or +1");
    }
  }
}

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<std::int8_t> genes;
  genes.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+': genes.push_back(1); break;
      case '-': genes.push_back(-1); break;
      case '0': genes.push_back(0); break;
      default:
        throw FormatError(std::string("sign pattern: unexpected character '") + c + "'");
    }
  }
  return SignPattern(std::move(genes));
}

std::string SignPattern::to_string() const {
  std::string out;
  out.reserve(genes_.size());
  for (std::int8_t g : genes_) {
    out.push_back(g > 0 ? '+' : (g < 0 ? '-' : '0'));
  }
  return out;
}

Pcm build_perfect_pcm(const Weights& w) {
  const int n = w.count();
  const auto& v = w.values();
  std::vector<double> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      entries[static_cast<std::size_t>(i) * n + j] = v[i] / v[j];
    }
  }
  return Pcm(n, std::move(entries));
}

Pcm apply_sign_perturbation(const Pcm& pcm, const PerturbationConfig& cfg,
                            const SignPattern& pattern) {
  cfg.validate();
  const int n = pcm.size();
  if (pattern.size() != pattern_length(n, cfg.half_matrix)) {
    throw ContractError("sign pattern: expected " +
                        std::to_string(pattern_length(n, cfg.half_matrix)) + " genes, got " +
                        std::to_string(pattern.size()));
  }
  if (cfg.mode == PerturbationMode::PlusMinus) {
    for (std::int8_t g : pattern.genes()) {
      if (g == 0) {
        throw ContractError("sign pattern: zero gene not allowed in +/- mode");
      }
    }
  }

  std::vector<double> entries = pcm.entries();
  const auto& genes = pattern.genes();
  std::size_t k = 0;
  if (cfg.half_matrix) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const std::size_t up = static_cast<std::size_t>(i) * n + j;
        entries[up] = pcm.entries()[up] * (1.0 + genes[k++] * cfg.delta);
        entries[static_cast<std::size_t>(j) * n + i] = 1.0 / entries[up];
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const std::size_t idx = static_cast<std::size_t>(i) * n + j;
        entries[idx] = pcm.entries()[idx] * (1.0 + genes[k++] * cfg.delta);
      }
    }
  }
  return Pcm(n, std::move(entries));
}

bool check_reciprocity(const Pcm& pcm) {
  const int n = pcm.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::fabs(pcm.at(i, j) * pcm.at(j, i) - 1.0) > kReciprocityTol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace pcmgate
