#include "coeffpat/blocks.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "coeffpat/error.hpp"

namespace coeffpat {

std::string block_text(const Block& b, Prime p) {
    std::string out;
    const bool wide = p.value() > 10;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto d = static_cast<unsigned char>(b[i]);
        if (wide) {
            if (i) out += ',';
            out += std::to_string(d);
        } else {
            out += static_cast<char>('0' + d);
        }
    }
    return out;
}

BlockSet::BlockSet(Prime p, std::size_t length, std::vector<Block> members)
    : p_(p), length_(length), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (const auto& b : members_) {
        if (b.size() != length_) throw std::invalid_argument("BlockSet: mixed block lengths");
    }
}

bool BlockSet::contains(const Block& b) const {
    return std::binary_search(members_.begin(), members_.end(), b);
}

std::string BlockSet::serialize() const {
    std::string out;
    for (const auto& b : members_) {
        out += block_text(b, p_);
        out += '\n';
    }
    return out;
}

std::vector<Block> BlockSet::complement() const {
    const std::uint32_t p = p_.value();
    double universe = 1;
    for (std::size_t i = 0; i < length_; ++i) universe *= p;
    if (universe > 1e7) throw std::invalid_argument("BlockSet::complement: universe too large");
    std::vector<Block> out;
    Block cur(length_, '\0');
    // odometer over all p^m strings; the result comes out sorted
    while (true) {
        if (!contains(cur)) out.push_back(cur);
        std::size_t i = length_;
        while (i > 0) {
            --i;
            if (static_cast<unsigned char>(cur[i]) + 1u < p) {
                cur[i] = static_cast<char>(cur[i] + 1);
                std::fill(cur.begin() + static_cast<long>(i) + 1, cur.end(), '\0');
                break;
            }
            if (i == 0) return out;
        }
        if (length_ == 0) return out;
    }
}

namespace {

/// Distinct length-n windows of zero-padded rows. Small universes use a dense
/// bitmap over base-p codes, mid-size ones a hash set of codes, the rest strings.
class WindowCollector {
public:
    WindowCollector(Residue p, std::size_t n) : p_(p), n_(n) {
        long double universe = 1;
        for (std::size_t i = 0; i < n; ++i) universe *= p;
        if (universe <= static_cast<long double>(1u << 27)) {
            mode_ = Mode::Dense;
            bits_.assign(static_cast<std::size_t>(universe) / 64 + 1, 0);
        } else if (universe < 1.8e19L) {
            mode_ = Mode::Codes;
        } else {
            mode_ = Mode::Strings;
        }
        top_ = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) top_ *= p;
    }

    /// Adds every window of 0^n row 0^n; returns how many were new.
    std::size_t add_row(std::span<const Residue> row) {
        const std::size_t before = size_;
        if (n_ == 0) {
            insert_code(0);
            return size_ - before;
        }
        if (mode_ == Mode::Strings) {
            std::string padded(n_, '\0');
            for (Residue r : row) padded.push_back(static_cast<char>(r));
            padded.append(n_, '\0');
            for (std::size_t i = 0; i + n_ <= padded.size(); ++i) {
                if (strings_.insert(padded.substr(i, n_)).second) ++size_;
            }
            return size_ - before;
        }
        std::uint64_t code = 0;
        insert_code(0);
        auto push = [&](Residue d) {
            code = (code % top_) * p_ + d;
            insert_code(code);
        };
        for (Residue r : row) push(r);
        for (std::size_t i = 0; i < n_; ++i) push(0);
        return size_ - before;
    }

    std::size_t size() const noexcept { return size_; }

    std::vector<Block> blocks() const {
        std::vector<Block> out;
        out.reserve(size_);
        if (mode_ == Mode::Strings) {
            out.assign(strings_.begin(), strings_.end());
            return out;
        }
        auto decode = [&](std::uint64_t c) {
            Block b(n_, '\0');
            for (std::size_t i = n_; i > 0; --i) {
                b[i - 1] = static_cast<char>(c % p_);
                c /= p_;
            }
            return b;
        };
        if (mode_ == Mode::Dense) {
            for (std::size_t w = 0; w < bits_.size(); ++w) {
                std::uint64_t word = bits_[w];
                while (word) {
                    const int bit = __builtin_ctzll(word);
                    out.push_back(decode(w * 64 + static_cast<std::uint64_t>(bit)));
                    word &= word - 1;
                }
            }
        } else {
            for (std::uint64_t c : codes_) out.push_back(decode(c));
        }
        return out;
    }

private:
    enum class Mode { Dense, Codes, Strings };

    void insert_code(std::uint64_t c) {
        if (mode_ == Mode::Dense) {
            std::uint64_t& word = bits_[c / 64];
            const std::uint64_t mask = 1ull << (c % 64);
            if (!(word & mask)) {
                word |= mask;
                ++size_;
            }
        } else if (codes_.insert(c).second) {
            ++size_;
        }
    }

    Residue p_;
    std::size_t n_;
    Mode mode_;
    std::uint64_t top_ = 1;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> bits_;
    std::unordered_set<std::uint64_t> codes_;
    std::unordered_set<std::string> strings_;
};

/// Distinct-prefix counts of a sorted set of equal-length strings.
std::vector<BigInt> prefix_profile(const std::vector<Block>& sorted, std::size_t nMax) {
    std::vector<std::size_t> breaks(nMax + 2, 0);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const auto& a = sorted[i - 1];
        const auto& b = sorted[i];
        std::size_t l = 0;
        while (l < nMax && a[l] == b[l]) ++l;
        // the pair is distinguished by every prefix longer than l
        ++breaks[l];
    }
    std::vector<BigInt> out(nMax + 1);
    out[0] = 1;
    std::size_t distinct = 1;
    for (std::size_t m = 1; m <= nMax; ++m) {
        distinct += breaks[m - 1];
        out[m] = to_bigint(static_cast<std::uint64_t>(sorted.empty() ? 0 : distinct));
    }
    return out;
}

std::uint64_t auto_initial_rows(const FpPoly& f, std::size_t n) {
    const std::uint64_t p = f.prime().value();
    return std::max<std::uint64_t>(8, 2 * p * (n + static_cast<std::uint64_t>(std::max(1L, f.degree()))));
}

std::vector<Block> doubling_blocks(const FpPoly& f, std::size_t n, DoublingOptions opts) {
    WindowCollector collector(f.prime().value(), n);
    RowIterator rows(f);
    std::uint64_t limit = opts.initialRows ? opts.initialRows : auto_initial_rows(f, n);
    if (limit > opts.maxRows) limit = opts.maxRows;
    collector.add_row(rows.digits());
    while (rows.index() < limit) {
        rows.advance();
        collector.add_row(rows.digits());
    }
    while (true) {
        if (2 * limit > opts.maxRows) {
            throw ComputationError("line_complexity: block set still changing at row cap " +
                                   std::to_string(opts.maxRows) + " (n=" + std::to_string(n) + ")");
        }
        std::size_t fresh = 0;
        while (rows.index() < 2 * limit) {
            rows.advance();
            fresh += collector.add_row(rows.digits());
        }
        if (fresh == 0) break;
        limit *= 2;
    }
    return collector.blocks();
}

struct Tap {
    std::uint32_t parentIndex;
    Residue coeff;
};

std::unordered_set<std::string> closure_windows(const FpPoly& f, std::size_t N, std::size_t back, std::size_t npar) {
    const Residue p = f.prime().value();
    std::vector<std::vector<Residue>> powers;
    {
        FpPoly acc = FpPoly::one(f.prime());
        for (Residue e = 0; e < p; ++e) {
            powers.push_back(acc.coeffs());
            acc = acc * f;
        }
    }
    // taps[e][phi][r]: contributions to child digit r from the parent window
    // when the child window starts at p*t + phi in row p*k + e
    std::vector<std::vector<std::vector<std::vector<Tap>>>> taps(
        p, std::vector<std::vector<std::vector<Tap>>>(p, std::vector<std::vector<Tap>>(N)));
    for (Residue e = 0; e < p; ++e) {
        const auto& coeffs = powers[e];
        for (Residue phi = 0; phi < p; ++phi) {
            for (std::size_t r = 0; r < N; ++r) {
                for (std::size_t jj = 0; jj < npar; ++jj) {
                    const long idx = static_cast<long>(phi + r) - static_cast<long>(p) * (static_cast<long>(jj) - static_cast<long>(back));
                    if (idx >= 0 && idx < static_cast<long>(coeffs.size()) && coeffs[static_cast<std::size_t>(idx)] != 0) {
                        taps[e][phi][r].push_back({static_cast<std::uint32_t>(jj), coeffs[static_cast<std::size_t>(idx)]});
                    }
                }
            }
        }
    }

    std::unordered_set<std::string> windows;
    std::vector<std::string> work;
    {
        std::string row0(N, '\0');
        row0.push_back('\1');
        row0.append(N, '\0');
        for (std::size_t i = 0; i + N <= row0.size(); ++i) {
            auto w = row0.substr(i, N);
            if (windows.insert(w).second) work.push_back(std::move(w));
        }
    }
    std::unordered_set<std::string> parents;
    std::string child(N, '\0');
    while (!work.empty()) {
        std::string w = std::move(work.back());
        work.pop_back();
        for (std::size_t i = 0; i + npar <= N; ++i) {
            std::string q = w.substr(i, npar);
            if (!parents.insert(q).second) continue;
            for (Residue e = 0; e < p; ++e) {
                for (Residue phi = 0; phi < p; ++phi) {
                    for (std::size_t r = 0; r < N; ++r) {
                        std::uint64_t s = 0;
                        for (const Tap& t : taps[e][phi][r]) {
                            s += static_cast<std::uint64_t>(t.coeff) * static_cast<unsigned char>(q[t.parentIndex]);
                        }
                        child[r] = static_cast<char>(s % p);
                    }
                    if (windows.insert(child).second) work.push_back(child);
                }
            }
        }
    }
    return windows;
}

std::vector<Block> closure_blocks(const FpPoly& f, std::size_t n) {
    if (f.is_zero()) throw std::invalid_argument("accessible blocks of the zero polynomial");
    if (f.prime().value() > 255) throw std::invalid_argument("closure engine supports p < 256");
    if (n == 0) return {Block{}};
    const std::size_t p = f.prime().value();
    const std::size_t d = static_cast<std::size_t>(f.degree());
    const std::size_t back = ((p - 1) * d + p - 1) / p;
    auto parentLength = [&](std::size_t N) { return (N + p - 2) / p + back + 1; };
    std::size_t N = n;
    while (parentLength(N) > N) ++N;
    auto windows = closure_windows(f, N, back, parentLength(N));
    std::vector<Block> out;
    out.reserve(windows.size());
    if (N == n) {
        out.assign(windows.begin(), windows.end());
    } else {
        std::unordered_set<std::string> prefixes;
        for (const auto& w : windows) prefixes.insert(w.substr(0, n));
        out.assign(prefixes.begin(), prefixes.end());
    }
    return out;
}

std::vector<Block> blocks_by(const FpPoly& f, std::size_t n, LineComplexityMethod method, DoublingOptions opts) {
    if (f.is_zero()) throw std::invalid_argument("accessible blocks of the zero polynomial");
    return method == LineComplexityMethod::Closure ? closure_blocks(f, n) : doubling_blocks(f, n, opts);
}

}  // namespace

BlockSet scan_accessible(const FpPoly& f, std::size_t n, std::uint64_t maxRow) {
    if (f.is_zero()) throw std::invalid_argument("scan_accessible: zero polynomial");
    WindowCollector collector(f.prime().value(), n);
    RowIterator rows(f);
    collector.add_row(rows.digits());
    while (rows.index() < maxRow) {
        rows.advance();
        collector.add_row(rows.digits());
    }
    return BlockSet(f.prime(), n, collector.blocks());
}

BlockSet closure_accessible(const FpPoly& f, std::size_t n) {
    return BlockSet(f.prime(), n, closure_blocks(f, n));
}

ComplexityValue line_complexity(const FpPoly& f, std::size_t n, LineComplexityMethod method, DoublingOptions opts) {
    const auto blocks = blocks_by(f, n, method, opts);
    return {n, to_bigint(static_cast<std::uint64_t>(blocks.size()))};
}

std::vector<BigInt> line_complexity_profile(const FpPoly& f, std::size_t nMax, LineComplexityMethod method,
                                            DoublingOptions opts) {
    auto blocks = blocks_by(f, nMax, method, opts);
    std::sort(blocks.begin(), blocks.end());
    return prefix_profile(blocks, nMax);
}

// ---------------------------------------------------------------------------
// recursions

void RecursionSpec::validate() const {
    if (p < 2) throw std::invalid_argument("RecursionSpec: bad prime");
    if (coeffs.size() != p) throw std::invalid_argument("RecursionSpec: need one coefficient row per residue");
    if (initials.size() < threshold) throw std::invalid_argument("RecursionSpec: initials do not reach the threshold");
    if (threshold == 0) throw std::invalid_argument("RecursionSpec: threshold must be positive");
    std::size_t maxLen = 0;
    for (const auto& row : coeffs) maxLen = std::max(maxLen, row.size());
    // beyond this window floor(m/p) >= 4 > any shift, so references are smaller
    for (std::uint64_t m = threshold; m < threshold + p * (maxLen + 4); ++m) {
        const std::uint64_t n = m / p;
        const auto& row = coeffs[m % p];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (sgn(row[j]) != 0 && n + j >= m) {
                throw std::invalid_argument("RecursionSpec: a(" + std::to_string(m) + ") refers to a(" +
                                            std::to_string(n + j) + ")");
            }
        }
    }
}

namespace {

void trim_row(std::vector<BigInt>& row) {
    while (!row.empty() && sgn(row.back()) == 0) row.pop_back();
}

}  // namespace

RecursionSpec recursion_1px(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("recursion_1px: not a prime");
    RecursionSpec rec;
    rec.p = p;
    const long P = p;
    for (long k = 0; k < P; ++k) {
        std::vector<BigInt> row{
            BigInt((P - k) * (P - k + 1) / 2),
            BigInt(k * P + k - k * k + (P * P - P) / 2),
            BigInt((k * k - k) / 2),
        };
        trim_row(row);
        rec.coeffs.push_back(std::move(row));
    }
    rec.constant = BigInt((2 * P - 1) * (2 * P - 2));
    rec.initials = {BigInt(1), BigInt(P), BigInt(P * P)};
    rec.threshold = 3;
    rec.validate();
    return rec;
}

RecursionSpec recursion_1xx2_mod2() {
    RecursionSpec rec;
    rec.p = 2;
    rec.coeffs = {{BigInt(2), BigInt(2)}, {BigInt(1), BigInt(2), BigInt(1)}};
    rec.constant = 8;
    rec.initials = {BigInt(1), BigInt(2), BigInt(4), BigInt(8), BigInt(14), BigInt(25)};
    rec.threshold = 6;
    rec.validate();
    return rec;
}

BigInt a_from_recursion(const RecursionSpec& rec, std::uint64_t n) {
    std::unordered_map<std::uint64_t, BigInt> memo;
    std::function<BigInt(std::uint64_t)> eval = [&](std::uint64_t m) -> BigInt {
        if (m < rec.threshold) {
            if (m < rec.initials.size()) return rec.initials[m];
            throw std::invalid_argument("a_from_recursion: no initial value for a(" + std::to_string(m) + ")");
        }
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        const std::uint64_t base = m / rec.p;
        const auto& row = rec.coeffs[m % rec.p];
        BigInt acc = -rec.constant;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (sgn(row[j]) != 0) acc += row[j] * eval(base + j);
        }
        memo.emplace(m, acc);
        return acc;
    };
    return eval(n);
}

std::vector<BigInt> recursion_prefix(const RecursionSpec& rec, std::size_t N) {
    std::vector<BigInt> a;
    a.reserve(N + 1);
    for (std::size_t m = 0; m <= N; ++m) {
        if (m < rec.threshold) {
            if (m >= rec.initials.size()) throw std::invalid_argument("recursion_prefix: missing initial value");
            a.push_back(rec.initials[m]);
            continue;
        }
        const std::size_t base = m / rec.p;
        const auto& row = rec.coeffs[m % rec.p];
        BigInt acc = -rec.constant;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (sgn(row[j]) != 0) acc += row[j] * a[base + j];
        }
        a.push_back(std::move(acc));
    }
    return a;
}

ComplexityValue a_1px(std::uint32_t p, std::uint64_t n) {
    return {static_cast<std::size_t>(n), a_from_recursion(recursion_1px(p), n)};
}

std::vector<BigInt> ab_difference_sequence(std::uint32_t p, std::size_t N) {
    if (!is_prime(p)) throw std::invalid_argument("ab_difference_sequence: not a prime");
    const BigInt P = p;
    std::vector<BigInt> a{BigInt(1), P, P * P, (P * P * P + 4 * P * P - 5 * P + 2) / 2};
    for (std::size_t m = 3; a.size() <= N; ++m) {
        const std::size_t n = m / p;
        const long k = static_cast<long>(m % p);
        a.push_back(a[m] + (static_cast<long>(p) - k) * (a[n + 1] - a[n]) + k * (a[n + 2] - a[n + 1]));
    }
    a.resize(N + 1);
    return a;
}

EquivalenceCheck verify_ab_equivalence(std::uint32_t p, std::size_t N) {
    if (N < 4) throw std::invalid_argument("verify_ab_equivalence: N must be at least 4");
    const auto direct = recursion_prefix(recursion_1px(p), N);
    const auto diff = ab_difference_sequence(p, N);
    for (std::size_t i = 0; i <= N; ++i) {
        if (direct[i] != diff[i]) return {false, i};
    }
    return {};
}

namespace {

/// Exact solve of an overdetermined system. Returns the unique solution, or
/// nullopt if inconsistent; sets ambiguous when the solution is not unique.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> rows, bool& ambiguous) {
    ambiguous = false;
    if (rows.empty()) return std::nullopt;
    const std::size_t cols = rows[0].size() - 1;
    std::size_t rank = 0;
    std::vector<std::size_t> pivotCol;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const Rational inv = 1 / rows[rank][c];
        for (auto& v : rows[rank]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || sgn(rows[r][c]) == 0) continue;
            const Rational factor = rows[r][c];
            for (std::size_t k = c; k <= cols; ++k) rows[r][k] -= factor * rows[rank][k];
        }
        pivotCol.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (sgn(rows[r][cols]) != 0) return std::nullopt;
    }
    if (rank < cols) {
        ambiguous = true;
        return std::nullopt;
    }
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < rank; ++r) x[pivotCol[r]] = rows[r][cols];
    return x;
}

bool rule_holds(const RecursionSpec& rec, const std::vector<BigInt>& data, std::size_t m) {
    const std::size_t n = m / rec.p;
    const auto& row = rec.coeffs[m % rec.p];
    BigInt acc = -rec.constant;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (sgn(row[j]) == 0) continue;
        if (n + j >= m || n + j >= data.size()) return false;
        acc += row[j] * data[n + j];
    }
    return acc == data[m];
}

}  // namespace

RecursionSpec infer_recursion_from_data(std::uint32_t p, const std::vector<BigInt>& data) {
    if (!is_prime(p)) throw std::invalid_argument("infer_recursion: not a prime");
    if (data.size() < 2) throw ComputationError("infer_recursion: not enough data");
    const std::size_t M = data.size() - 1;
    RecursionSpec rec;
    rec.p = p;
    std::optional<BigInt> sharedConstant;
    for (std::uint32_t k = 0; k < p; ++k) {
        bool found = false;
        bool starved = false;
        for (std::size_t J = 0; J <= 3 && !found; ++J) {
            std::vector<std::size_t> ns;
            for (std::size_t n = 0; p * n + k <= M; ++n) {
                if (n + J <= M && n + J < p * n + k) ns.push_back(n);
            }
            const std::vector<std::size_t> fit(ns.begin() + static_cast<long>(ns.size() / 2), ns.end());
            if (fit.size() < J + 3) {
                starved = true;
                continue;
            }
            std::vector<std::vector<Rational>> rows;
            for (std::size_t n : fit) {
                std::vector<Rational> row;
                for (std::size_t j = 0; j <= J; ++j) row.emplace_back(data[n + j]);
                row.emplace_back(-1);
                row.emplace_back(data[p * n + k]);
                rows.push_back(std::move(row));
            }
            bool ambiguous = false;
            auto sol = solve_exact(std::move(rows), ambiguous);
            if (ambiguous) {
                throw ComputationError("infer_recursion: data do not determine the rule for k=" + std::to_string(k));
            }
            if (!sol) continue;
            bool integral = true;
            for (const auto& v : *sol) integral = integral && v.get_den() == 1;
            if (!integral) continue;
            std::vector<BigInt> row;
            for (std::size_t j = 0; j <= J; ++j) row.push_back((*sol)[j].get_num());
            trim_row(row);
            const BigInt constant = sol->back().get_num();
            if (sharedConstant && *sharedConstant != constant) {
                throw ComputationError("no consistent recursion within template: constants differ between residues");
            }
            sharedConstant = constant;
            rec.coeffs.push_back(std::move(row));
            found = true;
        }
        if (!found) {
            throw ComputationError(starved ? "infer_recursion: not enough data for residue k=" + std::to_string(k)
                                           : "no consistent recursion within template for residue k=" + std::to_string(k));
        }
    }
    rec.constant = *sharedConstant;
    std::uint64_t threshold = M + 1;
    while (threshold > 1 && rule_holds(rec, data, threshold - 1)) --threshold;
    if (threshold > M / 2) throw ComputationError("infer_recursion: rule fails on the verification data");
    rec.threshold = std::max<std::uint64_t>(threshold, 1);
    rec.initials.assign(data.begin(), data.begin() + static_cast<long>(rec.threshold));
    rec.validate();
    return rec;
}

RecursionSpec infer_recursion(const FpPoly& f, std::size_t window) {
    const std::uint32_t p = f.prime().value();
    if (window == 0) window = std::max<std::size_t>(24, 12 * p);
    return infer_recursion_from_data(p, line_complexity_profile(f, window));
}

bool check_zero_interleaving(const FpPoly& f, std::uint64_t rows) {
    const std::uint32_t p = f.prime().value();
    std::vector<std::vector<Residue>> kept;
    RowIterator it(f);
    for (std::uint64_t m = 0; m < rows * p; ++m) {
        if (m < rows) kept.push_back(it.digits());
        if (m % p == 0) {
            const FpPoly expect = substitute_power(FpPoly(f.prime(), kept[m / p]), p);
            if (FpPoly(f.prime(), it.digits()) != expect) return false;
        }
        it.advance();
    }
    return true;
}

bool same_rule(const RecursionSpec& a, const RecursionSpec& b) {
    return a.p == b.p && a.coeffs == b.coeffs && a.constant == b.constant;
}

SimilarityReport check_cxx2_similarity(std::uint32_t p, std::size_t window) {
    SimilarityReport rep;
    rep.p = p;
    const Prime prime(p);
    for (std::uint32_t c = 1; c < p; ++c) {
        rep.byC.push_back(infer_recursion(FpPoly(prime, {c, 1, 1}), window));
    }
    if (p > 2) {
        for (std::uint32_t c = 1; c < p; ++c) {
            if ((4u * c) % p == 1) rep.quarter = c;
        }
    }
    rep.othersIdentical = true;
    const RecursionSpec* first = nullptr;
    for (std::uint32_t c = 1; c < p; ++c) {
        if (rep.quarter && *rep.quarter == c) continue;
        const auto& r = rep.byC[c - 1];
        if (!first) first = &r;
        rep.othersIdentical = rep.othersIdentical && same_rule(*first, r);
    }
    if (rep.quarter) rep.quarterMatchesOnePlusX = same_rule(rep.byC[*rep.quarter - 1], recursion_1px(p));
    return rep;
}

}  // namespace coeffpat
