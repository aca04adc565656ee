// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#include "georeason/eval/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "georeason/errors.hpp"
#include "georeason/retrieval/embedding.hpp"

namespace georeason::eval {

namespace {

constexpr double kBleuEpsilon = 1e-9;
constexpr double kRougeBeta = 1.2;
constexpr double kMeteorAlpha = 0.9;
constexpr double kMeteorGamma = 0.5;
constexpr double kMeteorBetaExp = 3.0;
constexpr double kCiderSigma = 6.0;
constexpr int kCiderMaxN = 4;

using Tokens = std::vector<std::string>;

// N-grams as joined strings. Tokens are split on whitespace, so a space
// can never occur inside one and the joint form is unambiguous.
std::string join_gram(const Tokens& tokens, std::size_t start, int n) {
    std::string g = tokens[start];
    for (int k = 1; k < n; ++k) {
        g += ' ';
        g += tokens[start + k];
    }
    return g;
}

std::unordered_map<std::string, std::size_t> ngram_counts(const Tokens& tokens, int n) {
    std::unordered_map<std::string, std::size_t> counts;
    if (n <= 0 || tokens.size() < static_cast<std::size_t>(n)) return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        ++counts[join_gram(tokens, i, n)];
    }
    return counts;
}

std::size_t lcs_length(const Tokens& a, const Tokens& b) {
    if (a.empty() || b.empty()) return 0;
    std::vector<std::size_t> row(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t prev_diag = 0;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t cur = row[j];
            if (a[i - 1] == b[j - 1]) {
                row[j] = prev_diag + 1;
            } else {
                row[j] = std::max(row[j], row[j - 1]);
            }
            prev_diag = cur;
        }
    }
    return row[b.size()];
}

// --- METEOR alignment -------------------------------------------------------

struct AlignedPair {
    std::size_t cand_pos;
    std::size_t ref_pos;
};

// Greedy longest-common-block alignment over exact token matches: repeatedly
// take the longest contiguous run of still-unmatched equal tokens (ties:
// earliest candidate position, then earliest reference position). Every
// common token eventually pairs up, so the match count is the multiset
// intersection size; the block choice keeps chunks low.
std::vector<AlignedPair> align_exact(const Tokens& cand, const Tokens& ref) {
    std::vector<bool> cand_used(cand.size(), false);
    std::vector<bool> ref_used(ref.size(), false);
    std::vector<AlignedPair> pairs;

    while (true) {
        std::size_t best_len = 0;
        std::size_t best_c = 0;
        std::size_t best_r = 0;
        for (std::size_t ci = 0; ci < cand.size(); ++ci) {
            if (cand_used[ci]) continue;
            for (std::size_t ri = 0; ri < ref.size(); ++ri) {
                if (ref_used[ri] || cand[ci] != ref[ri]) continue;
                std::size_t len = 0;
                while (ci + len < cand.size() && ri + len < ref.size() &&
                       !cand_used[ci + len] && !ref_used[ri + len] &&
                       cand[ci + len] == ref[ri + len]) {
                    ++len;
                }
                if (len > best_len) {
                    best_len = len;
                    best_c = ci;
                    best_r = ri;
                }
            }
        }
        if (best_len == 0) break;
        for (std::size_t k = 0; k < best_len; ++k) {
            cand_used[best_c + k] = true;
            ref_used[best_r + k] = true;
            pairs.push_back({best_c + k, best_r + k});
        }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const AlignedPair& a, const AlignedPair& b) { return a.cand_pos < b.cand_pos; });
    return pairs;
}

std::size_t count_chunks(const std::vector<AlignedPair>& pairs) {
    if (pairs.empty()) return 0;
    std::size_t chunks = 1;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i].cand_pos != pairs[i - 1].cand_pos + 1 ||
            pairs[i].ref_pos != pairs[i - 1].ref_pos + 1) {
            ++chunks;
        }
    }
    return chunks;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(current);
            current.clear();
        }
    };
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isspace(c)) {
            flush();
        } else if (std::ispunct(c)) {
            flush();
            tokens.emplace_back(1, static_cast<char>(c));
        } else {
            current.push_back(static_cast<char>(std::tolower(c)));
        }
    }
    flush();
    return tokens;
}

double bleu_n(const std::string& candidate, std::span<const std::string> references, int n) {
    if (n < 1 || n > 4) throw Error("bleu_n order must be in 1..4");
    if (references.empty()) throw Error("bleu_n needs at least one reference");
    Tokens cand = tokenize(candidate);
    if (cand.empty()) return 0.0;

    std::vector<Tokens> refs;
    refs.reserve(references.size());
    for (const std::string& r : references) refs.push_back(tokenize(r));

    double log_sum = 0.0;
    for (int k = 1; k <= n; ++k) {
        auto cand_counts = ngram_counts(cand, k);
        std::size_t total = 0;
        for (const auto& [_, c] : cand_counts) total += c;

        std::vector<std::unordered_map<std::string, std::size_t>> ref_counts;
        ref_counts.reserve(refs.size());
        for (const Tokens& ref : refs) ref_counts.push_back(ngram_counts(ref, k));

        std::size_t clipped = 0;
        for (const auto& [gram, c] : cand_counts) {
            std::size_t max_ref = 0;
            for (const auto& counts : ref_counts) {
                auto it = counts.find(gram);
                if (it != counts.end()) max_ref = std::max(max_ref, it->second);
            }
            clipped += std::min(c, max_ref);
        }
        double precision =
            total == 0 ? 0.0 : static_cast<double>(clipped) / static_cast<double>(total);
        if (precision == 0.0) precision = kBleuEpsilon;
        log_sum += std::log(precision);
    }
    double geo_mean = std::exp(log_sum / n);

    // Closest reference length; ties go to the shorter reference.
    std::size_t c_len = cand.size();
    std::size_t best_r = refs.front().size();
    for (const Tokens& ref : refs) {
        std::size_t r = ref.size();
        std::size_t best_gap = best_r > c_len ? best_r - c_len : c_len - best_r;
        std::size_t gap = r > c_len ? r - c_len : c_len - r;
        if (gap < best_gap || (gap == best_gap && r < best_r)) best_r = r;
    }
    double bp = c_len >= best_r
                    ? 1.0
                    : std::exp(1.0 - static_cast<double>(best_r) / static_cast<double>(c_len));
    return bp * geo_mean;
}

double rouge_l(const std::string& candidate, std::span<const std::string> references) {
    if (references.empty()) throw Error("rouge_l needs at least one reference");
    Tokens cand = tokenize(candidate);
    if (cand.empty()) return 0.0;

    double best = 0.0;
    double beta2 = kRougeBeta * kRougeBeta;
    for (const std::string& reference : references) {
        Tokens ref = tokenize(reference);
        if (ref.empty()) continue;
        double lcs = static_cast<double>(lcs_length(cand, ref));
        if (lcs == 0.0) continue;
        double p = lcs / static_cast<double>(cand.size());
        double r = lcs / static_cast<double>(ref.size());
        double f = (1.0 + beta2) * p * r / (r + beta2 * p);
        best = std::max(best, f);
    }
    return best;
}

double meteor_exact(const std::string& candidate, std::span<const std::string> references) {
    if (references.empty()) throw Error("meteor needs at least one reference");
    Tokens cand = tokenize(candidate);
    if (cand.empty()) return 0.0;

    double best = 0.0;
    for (const std::string& reference : references) {
        Tokens ref = tokenize(reference);
        if (ref.empty()) continue;
        auto pairs = align_exact(cand, ref);
        if (pairs.empty()) continue;
        double m = static_cast<double>(pairs.size());
        double p = m / static_cast<double>(cand.size());
        double r = m / static_cast<double>(ref.size());
        double f_mean = p * r / (kMeteorAlpha * p + (1.0 - kMeteorAlpha) * r);
        double chunks = static_cast<double>(count_chunks(pairs));
        double penalty = kMeteorGamma * std::pow(chunks / m, kMeteorBetaExp);
        best = std::max(best, f_mean * (1.0 - penalty));
    }
    return best;
}

std::optional<double> dist_n(std::span<const std::string> candidates, int n) {
    if (n != 1 && n != 2) throw Error("dist_n order must be 1 or 2");
    std::unordered_set<std::string> distinct;
    std::size_t total = 0;
    for (const std::string& candidate : candidates) {
        Tokens tokens = tokenize(candidate);
        if (tokens.size() < static_cast<std::size_t>(n)) continue;
        for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
            distinct.insert(join_gram(tokens, i, n));
            ++total;
        }
    }
    if (total == 0) return std::nullopt;
    return static_cast<double>(distinct.size()) / static_cast<double>(total);
}

double cider(std::span<const CiderItem> corpus) {
    if (corpus.empty()) throw EmptyEvaluationSet("cider over an empty corpus");
    for (const CiderItem& item : corpus) {
        if (item.references.empty()) throw Error("cider item without references");
    }

    const double num_items = static_cast<double>(corpus.size());

    // Document frequency per n-gram: in how many items' reference sets the
    // gram occurs.
    std::vector<std::unordered_map<std::string, double>> df(kCiderMaxN);
    for (const CiderItem& item : corpus) {
        std::vector<std::unordered_set<std::string>> seen(kCiderMaxN);
        for (const std::string& reference : item.references) {
            Tokens ref = tokenize(reference);
            for (int n = 1; n <= kCiderMaxN; ++n) {
                for (const auto& [gram, _] : ngram_counts(ref, n)) {
                    seen[n - 1].insert(gram);
                }
            }
        }
        for (int n = 0; n < kCiderMaxN; ++n) {
            for (const std::string& gram : seen[n]) df[n][gram] += 1.0;
        }
    }
    auto idf = [&](int n_index, const std::string& gram) {
        auto it = df[n_index].find(gram);
        double d = it == df[n_index].end() ? 0.0 : it->second;
        return std::log(num_items / std::max(1.0, d));
    };

    auto weighted = [&](const std::unordered_map<std::string, std::size_t>& counts, int n_index) {
        std::unordered_map<std::string, double> w;
        for (const auto& [gram, c] : counts) {
            w[gram] = static_cast<double>(c) * idf(n_index, gram);
        }
        return w;
    };

    double total_score = 0.0;
    for (const CiderItem& item : corpus) {
        Tokens cand = tokenize(item.candidate);
        double item_score = 0.0;
        for (int n = 1; n <= kCiderMaxN; ++n) {
            auto cand_counts = ngram_counts(cand, n);
            auto cand_vec = weighted(cand_counts, n - 1);
            double cand_norm = 0.0;
            for (const auto& [_, w] : cand_vec) cand_norm += w * w;
            cand_norm = std::sqrt(cand_norm);

            double ref_avg = 0.0;
            for (const std::string& reference : item.references) {
                Tokens ref = tokenize(reference);
                auto ref_counts = ngram_counts(ref, n);
                auto ref_vec = weighted(ref_counts, n - 1);
                double ref_norm = 0.0;
                for (const auto& [_, w] : ref_vec) ref_norm += w * w;
                ref_norm = std::sqrt(ref_norm);

                double cos;
                if (cand_norm == 0.0 && ref_norm == 0.0) {
                    // Degenerate idf (every gram in every item): fall back to
                    // raw-count equality so self-comparison stays maximal.
                    // Two texts too short for this order share nothing.
                    cos = !cand_counts.empty() && cand_counts == ref_counts ? 1.0 : 0.0;
                } else if (cand_norm == 0.0 || ref_norm == 0.0) {
                    cos = 0.0;
                } else {
                    double dot = 0.0;
                    for (const auto& [gram, w] : cand_vec) {
                        auto it = ref_vec.find(gram);
                        if (it != ref_vec.end()) dot += w * it->second;
                    }
                    cos = dot / (cand_norm * ref_norm);
                }

                double delta = static_cast<double>(cand.size()) - static_cast<double>(ref.size());
                double penalty = std::exp(-(delta * delta) / (2.0 * kCiderSigma * kCiderSigma));
                ref_avg += cos * penalty;
            }
            ref_avg /= static_cast<double>(item.references.size());
            item_score += ref_avg;
        }
        total_score += item_score / kCiderMaxN * 10.0;
    }
    return total_score / num_items;
}

std::optional<double> bertscore_f1(const std::string& candidate,
                                   std::span<const std::string> references,
                                   backends::EncoderBackend& encoder) {
    if (!encoder.supports_text_tokens()) return std::nullopt;
    auto cand_vecs = encoder.embed_text_tokens(candidate);
    if (cand_vecs.empty()) return 0.0;

    double best = 0.0;
    for (const std::string& reference : references) {
        auto ref_vecs = encoder.embed_text_tokens(reference);
        if (ref_vecs.empty()) continue;
        double precision = 0.0;
        for (const auto& c : cand_vecs) {
            double m = -1.0;
            for (const auto& r : ref_vecs) m = std::max(m, retrieval::cosine(c, r));
            precision += m;
        }
        precision /= static_cast<double>(cand_vecs.size());
        double recall = 0.0;
        for (const auto& r : ref_vecs) {
            double m = -1.0;
            for (const auto& c : cand_vecs) m = std::max(m, retrieval::cosine(r, c));
            recall += m;
        }
        recall /= static_cast<double>(ref_vecs.size());
        double denom = precision + recall;
        double f1 = denom <= 0.0 ? 0.0 : 2.0 * precision * recall / denom;
        best = std::max(best, f1);
    }
    return best;
}

}  // namespace georeason::eval
