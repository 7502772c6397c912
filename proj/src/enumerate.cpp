#include "upsemi/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace upsemi {

namespace {

constexpr ElementIndex unset = 0xFF;

void require_search_order(int order)
{
    if (order < 1 || order > max_search_order)
        throw std::domain_error("search order " + std::to_string(order) +
                                " outside supported range 1.." + std::to_string(max_search_order));
}

int resolve_threads(int requested)
{
    if (requested > 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

// Backtracking search for UP-algebra dot tables with zero fixed at 0.
// UP-2, UP-3 and the derived law x.x = 0 pin the zero row, zero column and
// diagonal, leaving (n-1)(n-2) free cells, filled row-major with ascending
// values so the stream comes out in lexicographic order.
struct UpAlgebraSearch
{
    int n;
    std::array<ElementIndex, max_search_order * max_search_order> t{};
    std::vector<std::pair<int, int>> free_cells;
    std::vector<CayleyTable> found;

    explicit UpAlgebraSearch(int order) : n(order)
    {
        t.fill(unset);
        for (int y = 0; y < n; ++y)
            t[0 * n + y] = ElementIndex(y);
        for (int x = 0; x < n; ++x)
            t[x * n + 0] = 0;
        for (int x = 0; x < n; ++x)
            t[x * n + x] = 0;
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y)
                if (x != y)
                    free_cells.emplace_back(x, y);
    }

    ElementIndex at(int x, int y) const { return t[x * n + y]; }

    // UP-1 instances are verified as soon as every entry on their evaluation
    // path is assigned; unknowns never prune. At the leaf all instances are
    // fully assigned, so the final table needs no separate UP-1 pass.
    bool up1_consistent() const
    {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    const ElementIndex yz = at(y, z);
                    const ElementIndex xy = at(x, y);
                    const ElementIndex xz = at(x, z);
                    if (yz == unset || xy == unset || xz == unset)
                        continue;
                    const ElementIndex inner = at(xy, xz);
                    if (inner == unset)
                        continue;
                    const ElementIndex v = at(yz, inner);
                    if (v != unset && v != 0)
                        return false;
                }
        return true;
    }

    bool up4_consistent() const
    {
        for (int x = 1; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (at(x, y) == 0 && at(y, x) == 0)
                    return false;
        return true;
    }

    void run(std::size_t cell)
    {
        if (cell == free_cells.size()) {
            found.emplace_back(n, std::vector<ElementIndex>(t.begin(), t.begin() + n * n));
            return;
        }
        const auto [x, y] = free_cells[cell];
        for (int v = 0; v < n; ++v) {
            t[x * n + y] = ElementIndex(v);
            if (up4_consistent() && up1_consistent())
                run(cell + 1);
        }
        t[x * n + y] = unset;
    }
};

// Backtracking search for associative tables, all n^2 cells free.
struct AssociativeSearch
{
    int n;
    std::array<ElementIndex, max_search_order * max_search_order> t{};
    std::vector<CayleyTable> found;

    explicit AssociativeSearch(int order) : n(order) { t.fill(unset); }

    ElementIndex at(int x, int y) const { return t[x * n + y]; }

    bool consistent() const
    {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const ElementIndex xy = at(x, y);
                for (int z = 0; z < n; ++z) {
                    const ElementIndex yz = at(y, z);
                    const ElementIndex lhs = xy == unset ? unset : at(xy, z);
                    const ElementIndex rhs = yz == unset ? unset : at(x, yz);
                    if (lhs != unset && rhs != unset && lhs != rhs)
                        return false;
                }
            }
        return true;
    }

    void run(int cell)
    {
        if (cell == n * n) {
            found.emplace_back(n, std::vector<ElementIndex>(t.begin(), t.begin() + n * n));
            return;
        }
        for (int v = 0; v < n; ++v) {
            t[cell] = ElementIndex(v);
            if (consistent())
                run(cell + 1);
        }
        t[cell] = unset;
    }
};

std::vector<CayleyTable> up_algebra_tables_raw(int order)
{
    UpAlgebraSearch search(order);
    search.run(0);
    return std::move(search.found);
}

std::vector<ElementIndex> relabeled_entries(const CayleyTable& table,
                                            std::span<const ElementIndex> perm)
{
    const int n = table.order();
    std::vector<ElementIndex> out(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out[perm[x] * n + perm[y]] = perm[table.at(x, y)];
    return out;
}

} // namespace

CanonicalKey canonical_key(const CayleyTable& dot, const CayleyTable* star, ElementIndex zero)
{
    const int n = dot.order();
    require_search_order(n);
    if (star && star->order() != n)
        throw std::domain_error("dot and star tables have different orders");
    if (zero >= n)
        throw std::domain_error("zero element out of range");

    std::vector<ElementIndex> moved;
    for (int e = 0; e < n; ++e)
        if (e != zero)
            moved.push_back(ElementIndex(e));

    CanonicalKey best;
    std::vector<ElementIndex> image = moved;
    std::array<ElementIndex, max_search_order> perm{};
    do {
        perm[zero] = zero;
        for (std::size_t i = 0; i < moved.size(); ++i)
            perm[moved[i]] = image[i];

        CanonicalKey candidate = relabeled_entries(dot, std::span(perm.data(), n));
        if (star) {
            const auto star_part = relabeled_entries(*star, std::span(perm.data(), n));
            candidate.insert(candidate.end(), star_part.begin(), star_part.end());
        }
        if (best.empty() || candidate < best)
            best = std::move(candidate);
    } while (std::next_permutation(image.begin(), image.end()));

    return best;
}

std::vector<UpAlgebra> enumerate_up_algebras(const SearchConfig& cfg)
{
    require_search_order(cfg.order);
    std::vector<CayleyTable> tables = up_algebra_tables_raw(cfg.order);

    if (cfg.up_to_iso) {
        std::vector<CanonicalKey> keys;
        keys.reserve(tables.size());
        for (const CayleyTable& t : tables)
            keys.push_back(canonical_key(t, nullptr, 0));
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        tables.clear();
        for (CanonicalKey& key : keys)
            tables.emplace_back(cfg.order, std::move(key));
    }

    std::vector<UpAlgebra> result;
    result.reserve(tables.size());
    std::uint64_t emitted = 0;
    for (CayleyTable& t : tables) {
        if (cfg.limit && emitted >= *cfg.limit)
            break;
        result.emplace_back(std::move(t), 0);
        ++emitted;
    }
    return result;
}

const std::vector<CayleyTable>& associative_tables(int order)
{
    require_search_order(order);

    static std::mutex mutex;
    static std::map<int, std::vector<CayleyTable>> cache;

    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        AssociativeSearch search(order);
        search.run(0);
        it = cache.emplace(order, std::move(search.found)).first;
    }
    return it->second;
}

namespace {

struct RawEmission
{
    std::uint32_t dot_index;
    std::uint32_t star_index;
    ClassLabelSet labels;
};

struct PairWork
{
    std::array<std::uint64_t, class_label_count> class_counts{};
    std::uint64_t pairs = 0;
    std::uint64_t matching = 0;
    // Raw mode: matching pairs in generation order, capped at limit.
    std::vector<RawEmission> emissions;
    // Iso mode: canonical pair key -> labels (labels are iso-invariant).
    std::map<CanonicalKey, ClassLabelSet> classes;
};

void scan_pairs(const std::vector<CayleyTable>& dots, std::size_t begin, std::size_t end,
                const std::vector<CayleyTable>& stars, const SearchConfig& cfg,
                bool collect_emissions, PairWork& work)
{
    for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t j = 0; j < stars.size(); ++j) {
            const ClassLabelSet labels = classify(distributivity_profile(dots[i], stars[j]));

            if (cfg.up_to_iso) {
                work.classes.emplace(canonical_key(dots[i], &stars[j], 0), labels);
                continue;
            }

            ++work.pairs;
            for (ClassLabel label : all_class_labels)
                if (labels.contains(label))
                    ++work.class_counts[static_cast<unsigned>(label)];
            if (!cfg.class_filter || labels.contains(*cfg.class_filter)) {
                ++work.matching;
                if (collect_emissions && (!cfg.limit || work.emissions.size() < *cfg.limit))
                    work.emissions.push_back({std::uint32_t(i), std::uint32_t(j), labels});
            }
        }
    }
}

} // namespace

EnumerationSummary enumerate_up_semigroups(const SearchConfig& cfg,
                                           const std::function<bool(const EnumeratedPair&)>& emit)
{
    require_search_order(cfg.order);

    const std::vector<CayleyTable> dots = up_algebra_tables_raw(cfg.order);
    const std::vector<CayleyTable>& stars = associative_tables(cfg.order);

    EnumerationSummary summary;
    summary.order = cfg.order;
    summary.up_to_iso = cfg.up_to_iso;
    summary.count_semigroups = stars.size();

    if (cfg.up_to_iso) {
        std::vector<CanonicalKey> keys;
        keys.reserve(dots.size());
        for (const CayleyTable& d : dots)
            keys.push_back(canonical_key(d, nullptr, 0));
        std::sort(keys.begin(), keys.end());
        summary.count_up_algebras = std::unique(keys.begin(), keys.end()) - keys.begin();
    } else {
        summary.count_up_algebras = dots.size();
    }

    // The profile scans are independent per pair; partition the dot tables
    // across workers and merge the per-worker results in worker order so the
    // outcome is identical for any thread count.
    int threads = resolve_threads(cfg.threads);
    if (static_cast<std::size_t>(threads) > dots.size())
        threads = std::max<int>(1, static_cast<int>(dots.size()));
    const bool collect_emissions = static_cast<bool>(emit);
    std::vector<PairWork> work(threads);
    if (threads <= 1) {
        scan_pairs(dots, 0, dots.size(), stars, cfg, collect_emissions, work[0]);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (dots.size() + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const std::size_t begin = std::min(dots.size(), w * chunk);
            const std::size_t end = std::min(dots.size(), begin + chunk);
            pool.emplace_back(scan_pairs, std::cref(dots), begin, end, std::cref(stars),
                              std::cref(cfg), collect_emissions, std::ref(work[w]));
        }
        for (std::thread& th : pool)
            th.join();
    }

    const auto emit_pair = [&](CayleyTable dot_table, CayleyTable star_table,
                               ClassLabelSet labels, std::uint64_t& emitted) {
        if (cfg.limit && emitted >= *cfg.limit)
            return false;
        if (!emit)
            return true;
        EnumeratedPair pair{UpAlgebra(std::move(dot_table), 0), SemigroupOp(std::move(star_table)),
                            labels};
        ++emitted;
        return emit(pair);
    };

    if (cfg.up_to_iso) {
        std::map<CanonicalKey, ClassLabelSet> classes;
        for (PairWork& w : work)
            classes.merge(w.classes);

        summary.count_pairs = classes.size();
        std::uint64_t emitted = 0;
        bool keep_emitting = true;
        const std::size_t table_size = static_cast<std::size_t>(cfg.order) * cfg.order;
        for (const auto& [key, labels] : classes) {
            for (ClassLabel label : all_class_labels)
                if (labels.contains(label))
                    ++summary.class_counts[static_cast<unsigned>(label)];
            if (cfg.class_filter && !labels.contains(*cfg.class_filter))
                continue;
            ++summary.matching_pairs;
            if (emit && keep_emitting)
                keep_emitting = emit_pair(
                    CayleyTable(cfg.order, {key.begin(), key.begin() + table_size}),
                    CayleyTable(cfg.order, {key.begin() + table_size, key.end()}), labels, emitted);
        }
    } else {
        std::uint64_t emitted = 0;
        bool keep_emitting = true;
        for (PairWork& w : work) {
            summary.count_pairs += w.pairs;
            summary.matching_pairs += w.matching;
            for (int i = 0; i < class_label_count; ++i)
                summary.class_counts[i] += w.class_counts[i];
            for (const RawEmission& e : w.emissions) {
                if (!keep_emitting)
                    break;
                keep_emitting = emit_pair(dots[e.dot_index], stars[e.star_index], e.labels, emitted);
            }
        }
    }

    return summary;
}

Prop8UniquenessReport confirm_prop8_uniqueness(int max_order)
{
    require_search_order(max_order);

    Prop8UniquenessReport report;
    report.pass = true;
    for (int order = 1; order <= max_order; ++order) {
        SearchConfig cfg;
        cfg.order = order;
        cfg.class_filter = ClassLabel::RF; // FF implies RF, so RF emission covers both
        cfg.limit = 1;

        std::optional<EnumeratedPair> first_match;
        const EnumerationSummary summary = enumerate_up_semigroups(cfg, [&](const EnumeratedPair& p) {
            first_match = p;
            return false;
        });

        const std::uint64_t rf = summary.class_counts[static_cast<unsigned>(ClassLabel::RF)];
        const std::uint64_t ff = summary.class_counts[static_cast<unsigned>(ClassLabel::FF)];
        const bool ok = order == 1 ? (rf == 1 && ff == 1) : (rf == 0 && ff == 0);
        if (!ok) {
            report.pass = false;
            if (order >= 2 && first_match && !report.offender)
                report.offender = first_match;
        }
        report.orders.push_back({order, rf, ff});
    }
    return report;
}

} // namespace upsemi
