#include "ellsurf/monodromy.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <gmpxx.h>

#include "ellsurf/errors.hpp"

namespace ellsurf {

// ---------------------------------------------------------------------------
// Perm

Perm Perm::identity(unsigned n) {
    Perm p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), 0U);
    return p;
}

Perm Perm::from_images(std::vector<unsigned> images) {
    std::vector<bool> hit(images.size(), false);
    for (unsigned x : images) {
        if (x >= images.size() || hit[x]) throw DomainError("images do not form a permutation");
        hit[x] = true;
    }
    Perm p;
    p.images_ = std::move(images);
    return p;
}

Perm Perm::from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles) {
    std::vector<unsigned> images(n);
    std::iota(images.begin(), images.end(), 0U);
    std::vector<bool> seen(n, false);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const unsigned x = cyc[i];
            if (x == 0 || x > n) throw DomainError("cycle point " + std::to_string(x) + " outside 1.." + std::to_string(n));
            if (seen[x - 1]) throw DomainError("point " + std::to_string(x) + " appears in two cycles");
            seen[x - 1] = true;
            images[x - 1] = cyc[(i + 1) % cyc.size()] - 1;
        }
    }
    return from_images(std::move(images));
}

Perm Perm::inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (unsigned x = 0; x < images_.size(); ++x) r.images_[images_[x]] = x;
    return r;
}

std::vector<std::vector<unsigned>> Perm::cycles() const {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(images_.size(), false);
    for (unsigned s = 0; s < images_.size(); ++s) {
        if (seen[s]) continue;
        std::vector<unsigned> cyc;
        for (unsigned x = s; !seen[x]; x = images_[x]) {
            seen[x] = true;
            cyc.push_back(x + 1);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Perm::to_string() const {
    std::string out;
    for (const auto& cyc : cycles()) {
        out += "(";
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i > 0) out += " ";
            out += std::to_string(cyc[i]);
        }
        out += ")";
    }
    return out;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw DomainError("product of permutations of different degree");
    Perm r;
    r.images_.resize(a.images_.size());
    for (unsigned x = 0; x < a.images_.size(); ++x) r.images_[x] = b.images_[a.images_[x]];
    return r;
}

Perm parse_perm(std::string_view text, std::optional<unsigned> degree) {
    std::vector<std::vector<unsigned>> cycles;
    std::size_t pos = 0;
    unsigned max_point = 0;
    auto fail = [&](const std::string& msg) -> Perm {
        throw ParseError("permutation parse error at position " + std::to_string(pos) + ": " + msg, pos);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    for (;;) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '(') return fail("expected '('");
        ++pos;
        std::vector<unsigned> cyc;
        for (;;) {
            skip_ws();
            if (pos == text.size()) return fail("unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return fail("expected a point");
            unsigned long v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + static_cast<unsigned>(text[pos] - '0');
                if (v > 4096) return fail("point too large");
                ++pos;
            }
            if (v == 0) return fail("points are numbered from 1");
            cyc.push_back(static_cast<unsigned>(v));
            max_point = std::max(max_point, static_cast<unsigned>(v));
        }
        if (cyc.empty()) return fail("empty cycle");
        cycles.push_back(std::move(cyc));
    }
    const unsigned n = degree.value_or(max_point);
    try {
        return Perm::from_cycles(n, cycles);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), pos);
    }
}

// ---------------------------------------------------------------------------
// Cycle types

CycleType::CycleType(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_) {
        if (p == 0) throw DomainError("cycle type with a zero part");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned CycleType::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

std::string CycleType::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

CycleType parse_cycle_type(std::string_view text) {
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (true) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        const std::size_t start = pos;
        unsigned long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned>(text[pos] - '0');
            if (v > 4096) throw ParseError("partition part too large", start);
            ++pos;
        }
        if (pos == start || v == 0) {
            throw ParseError("partition must be comma-separated positive integers", start);
        }
        parts.push_back(static_cast<unsigned>(v));
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return CycleType(std::move(parts));
}

CycleType cycle_type(const Perm& p) {
    std::vector<unsigned> parts;
    for (const auto& c : p.cycles()) parts.push_back(static_cast<unsigned>(c.size()));
    return CycleType(std::move(parts));
}

bool is_transitive(std::span<const Perm> generators, unsigned n) {
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<unsigned> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const unsigned x = stack.back();
        stack.pop_back();
        for (const auto& g : generators) {
            if (g.degree() != n) throw DomainError("generator of the wrong degree");
            const unsigned y = g(x);
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

std::optional<std::int64_t> genus_of_cover(unsigned degree, std::span<const CycleType> profiles) {
    std::int64_t chi = 2 * static_cast<std::int64_t>(degree);
    for (const auto& t : profiles) {
        for (unsigned p : t.parts()) chi -= static_cast<std::int64_t>(p) - 1;
    }
    if (chi % 2 != 0) return std::nullopt;
    return (2 - chi) / 2;
}

std::uint64_t conjugacy_class_size(const CycleType& t) {
    // n!/prod(k^m m!) accumulated as a product of binomial-style factors to
    // stay exact in 64 bits for the degrees searched.
    mpz_class num = 1;
    for (unsigned i = 2; i <= t.degree(); ++i) num *= i;
    mpz_class den = 1;
    std::vector<unsigned> mult(t.degree() + 1, 0);
    for (unsigned p : t.parts()) ++mult[p];
    for (unsigned k = 1; k < mult.size(); ++k) {
        for (unsigned j = 1; j <= mult[k]; ++j) den *= k * j;
    }
    const mpz_class q = num / den;
    if (!q.fits_ulong_p()) throw DomainError("conjugacy class too large");
    return q.get_ui();
}

std::vector<CycleType> partitions(unsigned n) {
    std::vector<CycleType> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// ---------------------------------------------------------------------------
// Search

namespace {

constexpr unsigned kHardMaxDegree = 32;

using Images = std::array<std::uint8_t, kHardMaxDegree>;

// Candidate test shared by all workers: fixed sigma1 and target over infinity.
struct Checker {
    unsigned n;
    Images sigma1{};
    std::vector<unsigned> target;  // parts of over_inf, decreasing

    bool accepts(const Images& sigma0) const {
        Images prod{};
        for (unsigned x = 0; x < n; ++x) prod[x] = sigma1[sigma0[x]];

        std::array<unsigned, kHardMaxDegree> lengths{};
        std::uint32_t seen = 0;
        unsigned cycles = 0;
        for (unsigned s = 0; s < n; ++s) {
            if (seen >> s & 1U) continue;
            unsigned len = 0;
            for (unsigned x = s; !(seen >> x & 1U); x = prod[x]) {
                seen |= 1U << x;
                ++len;
            }
            if (cycles == target.size()) return false;
            lengths[cycles++] = len;
        }
        if (cycles != target.size()) return false;
        std::sort(lengths.begin(), lengths.begin() + cycles, std::greater<>());
        if (!std::equal(target.begin(), target.end(), lengths.begin())) return false;

        // Orbit of 0 under <sigma0, sigma1>.
        std::uint32_t reached = 1;
        std::array<std::uint8_t, kHardMaxDegree> stack{};
        unsigned top = 0;
        stack[top++] = 0;
        while (top > 0) {
            const unsigned x = stack[--top];
            for (unsigned y : {static_cast<unsigned>(sigma0[x]), static_cast<unsigned>(sigma1[x])}) {
                if (!(reached >> y & 1U)) {
                    reached |= 1U << y;
                    stack[top++] = static_cast<std::uint8_t>(y);
                }
            }
        }
        const std::uint32_t all = n == 32 ? ~0U : ((1U << n) - 1);
        return reached == all;
    }
};

// Depth-first enumeration of one conjugacy class in canonical cycle form: each
// cycle starts at the least unused point, cycles in order of that point.
// Closing a cycle is tried before extending it, and extensions go by
// increasing point, which is lexicographic order on the cycle representation.
class ClassEnumerator {
public:
    ClassEnumerator(unsigned n, const CycleType& type) : n_(n) {
        counts_.assign(n + 1, 0);
        for (unsigned p : type.parts()) ++counts_[p];
    }

    /// Completions of the cycle through point 0, in enumeration order.
    std::vector<std::vector<unsigned>> first_cycles() const {
        std::vector<std::vector<unsigned>> out;
        std::vector<unsigned> cyc{0};
        std::uint32_t used = 1;
        auto rec = [&](auto&& self) -> void {
            const unsigned len = static_cast<unsigned>(cyc.size());
            if (counts_[len] > 0) out.push_back(cyc);
            if (!longer_part_left(len)) return;
            for (unsigned y = 1; y < n_; ++y) {
                if (used >> y & 1U) continue;
                used |= 1U << y;
                cyc.push_back(y);
                self(self);
                cyc.pop_back();
                used &= ~(1U << y);
            }
        };
        rec(rec);
        return out;
    }

    /// Visits every permutation whose first cycle is `first`. The visitor
    /// returns true to stop; the return value reports whether it stopped.
    template <typename Visit>
    bool run(const std::vector<unsigned>& first, Visit&& visit) {
        images_.fill(0);
        used_ = 0;
        for (std::size_t i = 0; i < first.size(); ++i) {
            images_[first[i]] = static_cast<std::uint8_t>(first[(i + 1) % first.size()]);
            used_ |= 1U << first[i];
        }
        --counts_[first.size()];
        const bool stopped = next_cycle(visit);
        ++counts_[first.size()];
        return stopped;
    }

private:
    bool longer_part_left(unsigned len) const {
        for (unsigned l = len + 1; l <= n_; ++l) {
            if (counts_[l] > 0) return true;
        }
        return false;
    }

    template <typename Visit>
    bool next_cycle(Visit& visit) {
        unsigned s = 0;
        while (s < n_ && (used_ >> s & 1U)) ++s;
        if (s == n_) return visit(images_);
        used_ |= 1U << s;
        const bool stopped = extend(visit, s, s, 1);
        used_ &= ~(1U << s);
        return stopped;
    }

    template <typename Visit>
    bool extend(Visit& visit, unsigned start, unsigned cur, unsigned len) {
        if (counts_[len] > 0) {
            images_[cur] = static_cast<std::uint8_t>(start);
            --counts_[len];
            const bool stopped = next_cycle(visit);
            ++counts_[len];
            if (stopped) return true;
        }
        if (!longer_part_left(len)) return false;
        for (unsigned y = start + 1; y < n_; ++y) {
            if (used_ >> y & 1U) continue;
            used_ |= 1U << y;
            images_[cur] = static_cast<std::uint8_t>(y);
            const bool stopped = extend(visit, start, y, len + 1);
            used_ &= ~(1U << y);
            if (stopped) return true;
        }
        return false;
    }

    unsigned n_;
    std::vector<unsigned> counts_;
    Images images_{};
    std::uint32_t used_ = 0;
};

Perm to_perm(const Images& img, unsigned n) {
    std::vector<unsigned> v(n);
    for (unsigned i = 0; i < n; ++i) v[i] = img[i];
    return Perm::from_images(std::move(v));
}

Perm block_representative(const CycleType& t) {
    std::vector<std::vector<unsigned>> cycles;
    unsigned next = 1;
    for (unsigned p : t.parts()) {
        std::vector<unsigned> cyc;
        for (unsigned i = 0; i < p; ++i) cyc.push_back(next++);
        cycles.push_back(std::move(cyc));
    }
    return Perm::from_cycles(t.degree(), cycles);
}

struct BranchResult {
    std::optional<Images> witness;
    std::uint64_t candidates = 0;
};

}  // namespace

SearchOutcome search(const SearchProblem& problem, const SearchOptions& options) {
    const unsigned n = problem.degree;
    if (n == 0) throw DomainError("search degree must be positive");
    if (n > options.max_degree || n > kHardMaxDegree) {
        throw DomainError("degree " + std::to_string(n) + " exceeds the search bound " +
                          std::to_string(std::min(options.max_degree, kHardMaxDegree)));
    }
    for (const CycleType* t : {&problem.over0, &problem.over1728, &problem.over_inf}) {
        if (t->degree() != n) {
            throw DomainError("partition " + t->to_string() + " does not sum to the degree " + std::to_string(n));
        }
    }

    Checker checker{n, {}, problem.over_inf.parts()};
    const Perm sigma1 = block_representative(problem.over0);
    for (unsigned x = 0; x < n; ++x) checker.sigma1[x] = static_cast<std::uint8_t>(sigma1(x));

    const std::vector<std::vector<unsigned>> branches = ClassEnumerator(n, problem.over1728).first_cycles();
    std::vector<BranchResult> results(branches.size());
    // Lowest branch index holding a witness so far; later branches can stop.
    std::atomic<std::size_t> best{branches.size()};

    auto work = [&](unsigned worker, unsigned stride) {
        ClassEnumerator enumerator(n, problem.over1728);
        for (std::size_t b = worker; b < branches.size(); b += stride) {
            if (b > best.load()) break;
            BranchResult& r = results[b];
            enumerator.run(branches[b], [&](const Images& img) {
                ++r.candidates;
                if (!checker.accepts(img)) return false;
                r.witness = img;
                return true;
            });
            if (r.witness) {
                std::size_t cur = best.load();
                while (b < cur && !best.compare_exchange_weak(cur, b)) {
                }
                break;
            }
        }
    };

    const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(branches.size())));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w, workers);
        for (auto& t : threads) t.join();
    }

    // Branches before the winner are always scanned in full, so counting up to
    // it gives the single-worker figure; later branches may have started.
    SearchOutcome out;
    const std::size_t b = best.load();
    for (std::size_t i = 0; i < results.size() && i <= b; ++i) out.candidates += results[i].candidates;
    if (b < branches.size()) {
        out.witness = Witness{to_perm(*results[b].witness, n), sigma1};
    } else if (out.candidates != conjugacy_class_size(problem.over1728)) {
        throw std::logic_error("exhaustive search skipped candidates");
    }
    return out;
}

bool verify_witness(const SearchProblem& problem, const Witness& w) {
    const unsigned n = problem.degree;
    if (w.sigma0.degree() != n || w.sigma1.degree() != n) return false;
    if (cycle_type(w.sigma0) != problem.over1728) return false;
    if (cycle_type(w.sigma1) != problem.over0) return false;
    if (cycle_type(w.sigma0 * w.sigma1) != problem.over_inf) return false;
    const std::vector<Perm> gens{w.sigma0, w.sigma1};
    return is_transitive(gens, n);
}

std::string format_witness(const Witness& w) {
    return "sigma0 = " + w.sigma0.to_string() + "\nsigma1 = " + w.sigma1.to_string() +
           "\nproduct = " + (w.sigma0 * w.sigma1).to_string() + "\n";
}

std::vector<SurveyEntry> survey_partitions(unsigned degree, const SearchOptions& options) {
    if (degree == 0 || degree % 6 != 0) {
        throw DomainError("survey needs a degree divisible by 6 (profiles 3^(d/3) and 2^(d/2))");
    }
    const CycleType over0(std::vector<unsigned>(degree / 3, 3));
    const CycleType over1728(std::vector<unsigned>(degree / 2, 2));
    std::vector<SurveyEntry> out;
    for (const auto& p : partitions(degree)) {
        if (p.size() < 2) continue;
        SurveyEntry e;
        e.over_inf = p;
        const std::vector<CycleType> profiles{over0, over1728, p};
        e.genus = genus_of_cover(degree, profiles);
        const SearchOutcome r = search({degree, over0, over1728, p}, options);
        e.realizable = r.witness.has_value();
        e.witness = r.witness;
        e.candidates = r.candidates;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace ellsurf
