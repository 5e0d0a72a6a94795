#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "support.hpp"

using namespace mrips;
using mrips::testing::Gen;

namespace {

LGraph digon(double p)
{
    return LGraph::from_matrix({{0, 1}, {1, 0}}, LatticeDescriptor::scalar(p));
}

PersistenceDiagram dgm(std::vector<PersistencePoint> pts)
{
    return PersistenceDiagram(std::move(pts));
}

// Dense Z/2 vectors with a rank routine; enough for a few hundred simplices.
using Bits = std::vector<std::uint64_t>;

std::size_t rank_of(std::vector<Bits> rows)
{
    std::size_t rank = 0;
    if (rows.empty())
        return 0;
    const std::size_t bits = rows.front().size() * 64;
    for (std::size_t c = 0; c < bits && rank < rows.size(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t m = std::uint64_t{1} << (c % 64);
        std::size_t piv = rank;
        while (piv < rows.size() && !(rows[piv][w] & m))
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r][w] & m))
                for (std::size_t k = 0; k < rows[r].size(); ++k)
                    rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

// Rank of H_k(K_a) -> H_k(K_b) computed as dim(Z_k(a) + B_k(b)) - dim B_k(b),
// with the boundary rebuilt from face maps.
class RankOracle {
public:
    explicit RankOracle(const Filtration& f) : f_(f), words_((f.size() + 63) / 64)
    {
        std::map<Simplex, std::size_t> pos;
        for (std::size_t i = 0; i < f.size(); ++i)
            pos[Simplex(f.vertices(i).begin(), f.vertices(i).end())] = i;
        boundary_.assign(f.size(), Bits(words_, 0));
        for (std::size_t j = 0; j < f.size(); ++j) {
            const auto y = f.vertices(j);
            if (y.size() < 2)
                continue;
            for (std::size_t i = 0; i < y.size(); ++i) {
                const Simplex fc = face(y, i);
                if (!is_nondegenerate(fc))
                    continue;
                const std::size_t r = pos.at(fc);
                boundary_[j][r / 64] ^= std::uint64_t{1} << (r % 64);
            }
        }
    }

    std::size_t rank(std::size_t k, double a, double b) const
    {
        const auto z = cycles(k, a);
        std::vector<Bits> bnd;
        for (std::size_t j = 0; j < f_.size(); ++j)
            if (f_.dim(j) == k + 1 && f_.grade(j) <= b)
                bnd.push_back(boundary_[j]);
        const std::size_t db = rank_of(bnd);
        auto both = bnd;
        both.insert(both.end(), z.begin(), z.end());
        return rank_of(both) - db;
    }

private:
    // Basis of k-cycles among simplices of grade <= a, by tracked elimination.
    std::vector<Bits> cycles(std::size_t k, double a) const
    {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < f_.size(); ++j)
            if (f_.dim(j) == k && f_.grade(j) <= a)
                cols.push_back(j);
        std::vector<Bits> img, comb;
        for (std::size_t j : cols) {
            img.push_back(k == 0 ? Bits(words_, 0) : boundary_[j]);
            Bits e(words_, 0);
            e[j / 64] |= std::uint64_t{1} << (j % 64);
            comb.push_back(e);
        }
        std::vector<Bits> kernel;
        std::vector<bool> used(img.size(), false);
        for (std::size_t c = 0; c < words_ * 64; ++c) {
            const std::size_t w = c / 64;
            const std::uint64_t m = std::uint64_t{1} << (c % 64);
            std::optional<std::size_t> piv;
            for (std::size_t r = 0; r < img.size(); ++r)
                if (!used[r] && (img[r][w] & m)) {
                    piv = r;
                    break;
                }
            if (!piv)
                continue;
            used[*piv] = true;
            for (std::size_t r = 0; r < img.size(); ++r)
                if (r != *piv && (img[r][w] & m)) {
                    for (std::size_t x = 0; x < words_; ++x) {
                        img[r][x] ^= img[*piv][x];
                        comb[r][x] ^= comb[*piv][x];
                    }
                }
        }
        for (std::size_t r = 0; r < img.size(); ++r)
            if (std::all_of(img[r].begin(), img[r].end(), [](std::uint64_t x) { return x == 0; }))
                kernel.push_back(comb[r]);
        return kernel;
    }

    const Filtration& f_;
    std::size_t words_;
    std::vector<Bits> boundary_;
};

std::size_t rank_from_diagram(const PersistenceDiagram& d, std::size_t k, double a, double b)
{
    std::size_t n = 0;
    for (const auto& p : d.points())
        if (p.dim == k && p.birth <= a && p.death > b)
            ++n;
    return n;
}

} // namespace

TEST(BoundaryMatrix, DegenerateFacesAreDropped)
{
    const auto f = build_filtration(digon(1.0), 1);
    const auto m = boundary_matrix(f);
    std::map<Simplex, std::size_t> pos;
    for (std::size_t i = 0; i < f.size(); ++i)
        pos[Simplex(f.vertices(i).begin(), f.vertices(i).end())] = i;
    Column expect{static_cast<Index>(pos.at({0, 1})), static_cast<Index>(pos.at({1, 0}))};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(m.columns[pos.at({0, 1, 0})], expect);
    EXPECT_TRUE(m.columns[pos.at({0})].empty());

    const auto tri = build_filtration(LGraph::from_matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), 1);
    const auto mt = boundary_matrix(tri);
    for (std::size_t i = 0; i < tri.size(); ++i)
        pos[Simplex(tri.vertices(i).begin(), tri.vertices(i).end())] = i;
    Column abc{static_cast<Index>(pos.at({1, 2})), static_cast<Index>(pos.at({0, 2})), static_cast<Index>(pos.at({0, 1}))};
    std::sort(abc.begin(), abc.end());
    EXPECT_EQ(mt.columns[pos.at({0, 1, 2})], abc);
}

TEST(BoundaryMatrix, SquaresToZero)
{
    Gen gen(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = build_filtration(gen.scalar_graph(2 + gen.index(4), 2.0, 0.2), 2);
        const auto m = boundary_matrix(f);
        for (std::size_t j = 0; j < m.size(); ++j) {
            std::map<Index, int> acc;
            for (Index r : m.columns[j])
                for (Index s : m.columns[r])
                    acc[s] ^= 1;
            for (const auto& [row, v] : acc)
                EXPECT_EQ(v, 0) << "column " << j;
        }
    }
}

TEST(BoundaryMatrix, RejectsUnsortedInput)
{
    Filtration f(2, 0);
    const Simplex a{0}, b{1};
    f.push_back(a, 1.0);
    f.push_back(b, 0.0);
    EXPECT_THROW(boundary_matrix(f), InvalidInput);

    Filtration g(2, 1);
    const Simplex ab{0, 1};
    g.push_back(ab, 0.0);
    g.push_back(a, 0.0);
    g.push_back(b, 0.0);
    EXPECT_THROW(boundary_matrix(g), InvalidInput);
}

TEST(Diagram, Digon)
{
    const auto d1 = persistence_diagram(digon(1.0), 1);
    EXPECT_EQ(d1, dgm({{0, 0, kInf}, {0, 0, 1}, {1, 1, 2}}));
    const auto dinf = persistence_diagram(digon(kInf), 1);
    EXPECT_TRUE(dinf.in_dim(1).empty());
    EXPECT_EQ(dinf.in_dim(0), dgm({{0, 0, kInf}, {0, 0, 1}}));

    // the zero-length bar is kept on request
    const auto f = build_filtration(digon(kInf), 1);
    const auto verbose = reduce_and_extract(boundary_matrix(f), f.grades(), 1, {true});
    EXPECT_EQ(verbose.in_dim(1), dgm({{1, 1, 1}}));
}

TEST(Diagram, NonZeroDiagonalPullback)
{
    LGraph one(LatticeDescriptor::scalar(1.0), 1, Grade(1.0));
    const std::vector<Vertex> f{0, 0};
    const auto before = persistence_diagram(one, 1);
    const auto after = persistence_diagram(pullback(one, f), 1);
    EXPECT_TRUE(before.in_dim(1).empty());
    EXPECT_EQ(after.in_dim(1), dgm({{1, 1, 2}}));
}

TEST(Diagram, MatchesRankOracle)
{
    Gen gen(32);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const double p = std::vector<double>{1.0, 2.0, kInf}[gen.index(3)];
        const std::size_t n = 2 + gen.index(4);
        LGraph g = gen.scalar_graph(n, p, 0.2, true);
        if (gen.chance(0.3))
            g.set(0, 0, Grade(gen.small_int(0, 3)));
        const auto f = build_filtration(g, 1);
        if (f.size() > 400)
            continue;
        ++checked;
        const auto d = persistence_diagram(f);
        RankOracle oracle(f);
        std::vector<double> crit(f.grades().begin(), f.grades().end());
        crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
        for (std::size_t k = 0; k <= 1; ++k)
            for (std::size_t ia = 0; ia < crit.size(); ++ia)
                for (std::size_t ib = ia; ib < crit.size(); ++ib)
                    EXPECT_EQ(rank_from_diagram(d, k, crit[ia], crit[ib]), oracle.rank(k, crit[ia], crit[ib]))
                        << "dim " << k << " a=" << crit[ia] << " b=" << crit[ib];
    }
    EXPECT_GT(checked, 20);
}

TEST(Diagram, EulerCharacteristic)
{
    Gen gen(33);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = gen.scalar_graph(2 + gen.index(4), 2.0, 0.2, true);
        const auto f = build_filtration(g, 1);
        const std::size_t top = 2;
        const auto full = reduce_and_extract(boundary_matrix(f), f.grades(), top);
        for (double t : f.grades()) {
            long chi_cells = 0, chi_betti = 0;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (f.grade(i) <= t)
                    chi_cells += f.dim(i) % 2 ? -1 : 1;
            for (const auto& p : full.points())
                if (p.birth <= t && p.death > t)
                    chi_betti += p.dim % 2 ? -1 : 1;
            EXPECT_EQ(chi_cells, chi_betti);
        }
    }
}

TEST(Diagram, CsvRowsAreSorted)
{
    const auto d = dgm({{1, 1, 2}, {0, 0, kInf}, {0, 0, 1}});
    EXPECT_EQ(d.points().front(), (PersistencePoint{0, 0, 1}));
    EXPECT_EQ(d.points().back(), (PersistencePoint{1, 1, 2}));
}

TEST(BettiAt, Examples)
{
    const auto d = LGraph::from_matrix({{0, 2}, {2, 0}});
    const std::vector<double> gamma{2, 0};
    const auto g = sublevel_graph(d, gamma);
    EXPECT_EQ(betti_at(g, Grade{2, 2}, 1), (std::vector<std::size_t>{1, 0}));
    EXPECT_EQ(betti_at(g, Grade{1, 0}, 1), (std::vector<std::size_t>{1, 0}));
    EXPECT_EQ(betti_at(g, Grade{1, 2}, 1), (std::vector<std::size_t>{2, 0}));

    const std::vector<double> high{1, 1};
    EXPECT_EQ(betti_at(sublevel_graph(d, high), Grade{5, 0.5}, 1), (std::vector<std::size_t>{0, 0}));
}

namespace {

// Bottleneck by trying every bijection of the diagonal-augmented diagrams.
double brute_bottleneck(const std::vector<PersistencePoint>& a, const std::vector<PersistencePoint>& b)
{
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::size_t> perm(n + m);
    std::iota(perm.begin(), perm.end(), 0);
    double best = kInf;
    do {
        double worst = 0.0;
        for (std::size_t l = 0; l < n + m; ++l) {
            const std::size_t r = perm[l];
            const bool left_real = l < n, right_real = r < m;
            double c = 0.0;
            if (left_real && right_real)
                c = std::max(std::abs(a[l].birth - b[r].birth), std::abs(a[l].death - b[r].death));
            else if (left_real)
                c = (a[l].death - a[l].birth) / 2;
            else if (right_real)
                c = (b[r].death - b[r].birth) / 2;
            worst = std::max(worst, c);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

TEST(Bottleneck, Examples)
{
    const auto a = dgm({{0, 0, 2}});
    EXPECT_EQ(bottleneck(a, a, 0), 0.0);
    EXPECT_EQ(bottleneck(a, dgm({{0, 0, 3}}), 0), 1.0);
    EXPECT_EQ(bottleneck(a, dgm({}), 0), 1.0);
    EXPECT_EQ(bottleneck(dgm({{0, 0, kInf}}), dgm({}), 0), kInf);
    EXPECT_EQ(bottleneck(dgm({{0, 0, kInf}}), dgm({{0, 1.5, kInf}}), 0), 1.5);
    // other dimensions are ignored
    EXPECT_EQ(bottleneck(dgm({{1, 0, 5}}), dgm({}), 0), 0.0);
}

TEST(Bottleneck, MatchesExhaustiveMatching)
{
    Gen gen(34);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<PersistencePoint> a(gen.index(4)), b(gen.index(4));
        for (auto* side : {&a, &b})
            for (auto& p : *side) {
                p.birth = gen.chance(0.5) ? gen.small_int(0, 4) : gen.uniform(0, 4);
                p.death = p.birth + (gen.chance(0.5) ? gen.small_int(1, 3) : gen.uniform(0.01, 3));
            }
        EXPECT_EQ(bottleneck(PersistenceDiagram(a), PersistenceDiagram(b), 0), brute_bottleneck(a, b));
        EXPECT_EQ(bottleneck(PersistenceDiagram(a), PersistenceDiagram(b), 0), bottleneck(PersistenceDiagram(b), PersistenceDiagram(a), 0));
    }
}
