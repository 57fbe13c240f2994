#include "wsc/oracles.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

#include "wsc/errors.hpp"

namespace wsc::oracle {

namespace {

constexpr int kTaylorGenCap = 20;
constexpr std::size_t kBoxCap = std::size_t{1} << 20;

}  // namespace

std::size_t integer_rank(std::vector<std::vector<long long>> mat) {
    const std::size_t rows = mat.size();
    const std::size_t cols = rows ? mat[0].size() : 0;
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(mat[i][j]);

    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

BettiTable taylor_betti(const MonomialIdeal& a) {
    if (!a.is_proper()) fail(ErrorCode::DegenerateIdeal, "Betti table needs a proper nonzero ideal");
    const int m = static_cast<int>(a.gens.size());
    if (m > kTaylorGenCap) fail(ErrorCode::ResourceLimit, "too many generators for the Taylor oracle");

    // lcm of every nonempty generator subset, built off the lowest set bit
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::vector<Monomial> sub_lcm(full + 1, Monomial::one(a.n));
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int low = __builtin_ctz(s);
        sub_lcm[s] = sub_lcm[s & (s - 1)].lcm(a.gens[static_cast<std::size_t>(low)]);
    }

    std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> strands;
    for (std::uint32_t s = 1; s <= full; ++s) strands[sub_lcm[s].exps].push_back(s);

    BettiTable table;
    table.n = a.n;
    for (auto& [deg, subsets] : strands) {
        // basis of the strand, one layer per subset size
        std::vector<std::vector<std::uint32_t>> layer(static_cast<std::size_t>(m) + 1);
        for (std::uint32_t s : subsets) layer[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
        for (auto& l : layer) std::sort(l.begin(), l.end());

        // rank of the within-strand differential from layer t to layer t-1
        std::vector<std::size_t> rank(static_cast<std::size_t>(m) + 2, 0);
        for (std::size_t t = 2; t <= static_cast<std::size_t>(m); ++t) {
            if (layer[t].empty() || layer[t - 1].empty()) continue;
            std::map<std::uint32_t, std::size_t> col_of;
            for (std::size_t j = 0; j < layer[t - 1].size(); ++j) col_of[layer[t - 1][j]] = j;
            std::vector<std::vector<long long>> matrix(
                layer[t].size(), std::vector<long long>(layer[t - 1].size(), 0));
            for (std::size_t r = 0; r < layer[t].size(); ++r) {
                const std::uint32_t s = layer[t][r];
                int pos = 0;
                for (int g = 0; g < m; ++g) {
                    if (!(s >> g & 1u)) continue;
                    const std::uint32_t smaller = s & ~(std::uint32_t{1} << g);
                    if (sub_lcm[smaller].exps == deg)
                        matrix[r][col_of.at(smaller)] = (pos % 2 == 0) ? 1 : -1;
                    ++pos;
                }
            }
            rank[t] = integer_rank(std::move(matrix));
        }

        const Monomial b{deg};
        for (std::size_t t = 1; t <= static_cast<std::size_t>(m); ++t) {
            const std::size_t dim = layer[t].size();
            if (dim == 0) continue;
            const std::size_t h = dim - rank[t] - rank[t + 1];
            if (h > 0)
                table.multigraded.push_back({static_cast<int>(t) - 1, b, static_cast<std::uint64_t>(h)});
        }
    }
    std::sort(table.multigraded.begin(), table.multigraded.end(),
              [](const BettiEntry& x, const BettiEntry& y) {
                  if (x.i != y.i) return x.i < y.i;
                  return grlex_less(x.degree, y.degree);
              });
    return table;
}

std::vector<Monomial> monomials_in_box(const Monomial& box) {
    const int n = box.vars();
    std::size_t total = 1;
    for (std::uint32_t e : box.exps) {
        total *= e + 1;
        if (total > kBoxCap) fail(ErrorCode::ResourceLimit, "degree box too large to enumerate");
    }
    std::vector<Monomial> out;
    out.reserve(total);
    Monomial cur = Monomial::one(n);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < n && cur.exps[static_cast<std::size_t>(i)] == box.exps[static_cast<std::size_t>(i)]) {
            cur.exps[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
        ++cur.exps[static_cast<std::size_t>(i)];
    }
    return out;
}

namespace {

bool power_member_rec(const MonomialIdeal& a, const Monomial& m, int s,
                      std::map<std::pair<std::vector<std::uint32_t>, int>, bool>& memo) {
    if (s <= 0) return true;
    const auto key = std::make_pair(m.exps, s);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (const Monomial& g : a.gens) {
        if (!g.divides(m)) continue;
        if (power_member_rec(a, m.quotient_floor(g), s - 1, memo)) {
            ok = true;
            break;
        }
    }
    memo[key] = ok;
    return ok;
}

}  // namespace

bool power_member(const MonomialIdeal& a, const Monomial& m, int s) {
    if (s < 1) fail(ErrorCode::InvalidExponent, "power exponent must be at least 1");
    if (m.vars() != a.n) fail(ErrorCode::ArityMismatch, "monomial and ideal live in different rings");
    std::map<std::pair<std::vector<std::uint32_t>, int>, bool> memo;
    return power_member_rec(a, m, s, memo);
}

}  // namespace wsc::oracle
