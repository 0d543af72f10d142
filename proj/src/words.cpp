#include "szlab/words.hpp"

#include <algorithm>
#include <unordered_map>

namespace szlab {

Word Word::reduce(std::span<const Letter> letters) {
    Word w;
    for (Letter l : letters) w.push(l);
    return w;
}

Word Word::parse(std::string_view text) {
    Word w;
    for (char c : text) {
        switch (c) {
            case 'a': w.push(Letter::A); break;
            case 'A': w.push(Letter::AInv); break;
            case 'b': w.push(Letter::B); break;
            case 'B': w.push(Letter::BInv); break;
            default:
                throw std::invalid_argument(std::string("Word::parse: bad letter '") + c + "'");
        }
    }
    return w;
}

void Word::push(Letter l) {
    if (n_ > 0 && last() == szlab::inverse(l)) {
        pop();
        return;
    }
    size_t byte = n_ >> 2;
    unsigned shift = (n_ & 3) * 2;
    if (byte == packed_.size()) packed_.push_back(0);
    packed_[byte] = char(uint8_t(packed_[byte]) | (uint8_t(l) << shift));
    ++n_;
}

void Word::pop() {
    if (n_ == 0) throw std::invalid_argument("Word::pop: empty word");
    --n_;
    size_t byte = n_ >> 2;
    unsigned shift = (n_ & 3) * 2;
    packed_[byte] = char(uint8_t(packed_[byte]) & ~uint8_t(0b11u << shift));
    if ((n_ & 3) == 0) packed_.pop_back();
}

Word Word::inverse() const {
    Word w;
    for (size_t i = n_; i-- > 0;) w.push(szlab::inverse(at(i)));
    return w;
}

Word Word::operator*(const Word& rhs) const {
    Word w = *this;
    for (size_t i = 0; i < rhs.n_; ++i) w.push(rhs.at(i));
    return w;
}

Word Word::pow(int k) const {
    Word base = k < 0 ? inverse() : *this;
    Word acc;
    for (int i = 0; i < std::abs(k); ++i) acc = acc * base;
    return acc;
}

std::string Word::str() const {
    std::string s;
    s.reserve(n_);
    for (size_t i = 0; i < n_; ++i) s.push_back(letter_char(at(i)));
    return s;
}

bool shortlex_less(const Word& lhs, const Word& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    for (size_t i = 0; i < lhs.size(); ++i) {
        if (lhs.at(i) != rhs.at(i)) return uint8_t(lhs.at(i)) < uint8_t(rhs.at(i));
    }
    return false;
}

size_t WordHash::operator()(const Word& w) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (size_t i = 0; i < w.size(); ++i) {
        h ^= uint8_t(w.at(i)) + 1u;
        h *= 0x100000001b3ull;
    }
    return size_t(h ^ w.size());
}

uint64_t ball_size(int radius) {
    if (radius < 0) throw std::invalid_argument("ball_size: negative radius");
    uint64_t p = 1;
    for (int i = 0; i < radius; ++i) p *= 3;
    return 2 * p - 1;
}

void for_each_in_ball(int radius, const std::function<void(const Word&)>& fn) {
    if (radius < 0) throw std::invalid_argument("ball: negative radius");
    if (radius > 14) throw capacity_error("ball: radius capped at 14 (2*3^14 words)");
    Word root;
    fn(root);
    // Level-order walk; each level is visited in lex order, which extending
    // lex-ordered parents by ascending letters preserves.
    std::vector<Word> level{root};
    for (int len = 1; len <= radius; ++len) {
        std::vector<Word> next;
        next.reserve(level.size() * 3 + 1);
        for (const Word& w : level) {
            for (uint8_t li = 0; li < 4; ++li) {
                Letter l{li};
                if (!w.empty() && w.last() == inverse(l)) continue;
                Word child = w;
                child.push(l);
                fn(child);
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
}

std::vector<Word> ball(int radius) {
    std::vector<Word> out;
    out.reserve(size_t(ball_size(radius)));
    for_each_in_ball(radius, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<Word> words_up_to_inverse(int radius) {
    std::vector<Word> out;
    for_each_in_ball(radius, [&](const Word& w) {
        if (w.empty()) return;
        if (shortlex_less(w, w.inverse())) out.push_back(w);
    });
    return out;
}

uint64_t count_closed_walks(int n) {
    if (n < 0) throw std::invalid_argument("count_closed_walks: negative length");
    if (n > 12) throw capacity_error("count_closed_walks: length capped at 12");
    // walks[d] = number of strings whose reduction has length d; from the
    // root there are 4 ways out, elsewhere 3 ways out and 1 way back.
    std::vector<uint64_t> walks(size_t(n) + 2, 0);
    walks[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<uint64_t> next(walks.size(), 0);
        next[1] += 4 * walks[0];
        for (size_t d = 1; d < walks.size(); ++d) {
            if (walks[d] == 0) continue;
            next[d - 1] += walks[d];
            if (d + 1 < next.size()) next[d + 1] += 3 * walks[d];
        }
        walks = std::move(next);
    }
    return walks[0];
}

namespace {

TupleAuditResult sampled_audit(std::span<const Word> s, int l, uint64_t budget, uint64_t seed) {
    TupleAuditResult res;
    res.sampled = true;
    res.set_size = s.size();
    res.arity = l;
    FreeGroupOps ops;
    Rng rng = Rng::derive(seed, {stream::kTuple});
    const size_t tuple_len = size_t(1) << l;
    std::vector<Word> tuple(tuple_len);
    for (uint64_t trial = 0; trial < budget; ++trial) {
        for (auto& w : tuple) w = s[rng.below(s.size())];
        res.commutators_evaluated += tuple_len - 1;
        if (!iterated_commutator(ops, l, std::span<const Word>(tuple)).empty()) {
            res.violation = tuple;
            res.all_vanish = false;
            return res;
        }
    }
    res.all_vanish = true;
    return res;
}

}  // namespace

TupleAuditResult tuple_vanishing_audit(std::span<const Word> s, int l, uint64_t sample_budget,
                                       uint64_t seed) {
    if (l < 0 || l > 4) throw std::invalid_argument("tuple_vanishing_audit: l must be in 0..4");
    if (s.empty()) throw std::invalid_argument("tuple_vanishing_audit: empty set");

    TupleAuditResult res;
    res.set_size = s.size();
    res.arity = l;
    FreeGroupOps ops;

    if (l == 0) {
        for (const Word& w : s) {
            if (!w.empty()) {
                res.violation = {w};
                return res;
            }
        }
        res.all_vanish = true;
        return res;
    }

    // Level sets: psi_l vanishes on S^(2^l) iff every pair from the deduped
    // image of psi_{l-1} commutes. Provenance tracks a witness tuple.
    constexpr uint64_t kPairCap = 4'000'000;
    std::vector<Word> level;
    std::vector<std::vector<Word>> prov;
    {
        std::unordered_map<Word, size_t, WordHash> seen;
        for (const Word& w : s) {
            if (seen.emplace(w, level.size()).second) {
                level.push_back(w);
                prov.push_back({w});
            }
        }
    }

    for (int depth = 1; depth < l; ++depth) {
        uint64_t pairs = uint64_t(level.size()) * level.size();
        if (pairs > kPairCap) return sampled_audit(s, l, sample_budget, seed);
        std::unordered_map<Word, size_t, WordHash> seen;
        std::vector<Word> next;
        std::vector<std::vector<Word>> next_prov;
        for (size_t i = 0; i < level.size(); ++i) {
            for (size_t j = 0; j < level.size(); ++j) {
                Word c = commutator(ops, level[i], level[j]);
                ++res.commutators_evaluated;
                if (seen.emplace(c, next.size()).second) {
                    next.push_back(c);
                    std::vector<Word> p = prov[i];
                    p.insert(p.end(), prov[j].begin(), prov[j].end());
                    next_prov.push_back(std::move(p));
                }
            }
        }
        level = std::move(next);
        prov = std::move(next_prov);
    }

    uint64_t final_pairs = uint64_t(level.size()) * level.size();
    if (final_pairs > kPairCap) return sampled_audit(s, l, sample_budget, seed);
    for (size_t i = 0; i < level.size(); ++i) {
        for (size_t j = 0; j < level.size(); ++j) {
            ++res.commutators_evaluated;
            if (!commutator(ops, level[i], level[j]).empty()) {
                res.violation = prov[i];
                res.violation.insert(res.violation.end(), prov[j].begin(), prov[j].end());
                res.all_vanish = false;
                return res;
            }
        }
    }
    res.all_vanish = true;
    return res;
}

}  // namespace szlab
