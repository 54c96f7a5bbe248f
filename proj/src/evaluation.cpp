#include "modecluster/evaluation.hpp"

#include <algorithm>
#include <unordered_map>

namespace modecluster {

long ContingencyTable::total() const noexcept {
    long t = 0;
    for (int v : row_marginals) t += v;
    return t;
}

ContingencyTable confusion(const std::vector<std::string>& labels_true,
                           const std::vector<int>& labels_pred) {
    if (labels_true.size() != labels_pred.size()) {
        throw InvalidInput("confusion: label vectors have different lengths");
    }
    if (labels_true.empty()) throw InvalidInput("confusion: empty labels");

    ContingencyTable table;
    std::unordered_map<std::string, int> row_id;
    int max_pred = 0;
    for (std::size_t i = 0; i < labels_true.size(); ++i) {
        if (labels_pred[i] < 0) throw InvalidInput("confusion: negative cluster index");
        max_pred = std::max(max_pred, labels_pred[i]);
        if (row_id.emplace(labels_true[i], static_cast<int>(table.row_names.size())).second) {
            table.row_names.push_back(labels_true[i]);
        }
    }
    const int r = static_cast<int>(table.row_names.size());
    const int c = max_pred + 1;
    table.counts = Eigen::MatrixXi::Zero(r, c);
    for (std::size_t i = 0; i < labels_true.size(); ++i) {
        ++table.counts(row_id[labels_true[i]], labels_pred[i]);
    }
    table.row_marginals.resize(static_cast<std::size_t>(r));
    table.col_marginals.resize(static_cast<std::size_t>(c));
    for (int i = 0; i < r; ++i) table.row_marginals[static_cast<std::size_t>(i)] = table.counts.row(i).sum();
    for (int j = 0; j < c; ++j) table.col_marginals[static_cast<std::size_t>(j)] = table.counts.col(j).sum();
    return table;
}

namespace {

std::vector<int> compact_ids(const std::vector<int>& labels, int& k) {
    std::unordered_map<int, int> map;
    std::vector<int> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = map.emplace(labels[i], static_cast<int>(map.size()));
        out[i] = it->second;
        (void)fresh;
    }
    k = static_cast<int>(map.size());
    return out;
}

inline long long choose2(long long v) { return v * (v - 1) / 2; }

}  // namespace

double adjusted_rand(const std::vector<int>& labels_a, const std::vector<int>& labels_b) {
    if (labels_a.size() != labels_b.size()) {
        throw InvalidInput("adjusted_rand: label vectors have different lengths");
    }
    const long long n = static_cast<long long>(labels_a.size());
    if (n < 2) throw InvalidInput("adjusted_rand: need at least 2 points");

    int ka = 0, kb = 0;
    const std::vector<int> a = compact_ids(labels_a, ka);
    const std::vector<int> b = compact_ids(labels_b, kb);

    std::vector<long long> nij(static_cast<std::size_t>(ka) * static_cast<std::size_t>(kb), 0);
    std::vector<long long> ai(static_cast<std::size_t>(ka), 0), bj(static_cast<std::size_t>(kb), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++nij[static_cast<std::size_t>(a[i]) * static_cast<std::size_t>(kb)
              + static_cast<std::size_t>(b[i])];
        ++ai[static_cast<std::size_t>(a[i])];
        ++bj[static_cast<std::size_t>(b[i])];
    }

    long long index = 0, sum_a = 0, sum_b = 0;
    for (long long v : nij) index += choose2(v);
    for (long long v : ai) sum_a += choose2(v);
    for (long long v : bj) sum_b += choose2(v);
    const long long pairs = choose2(n);

    // ARI = (Index - Expected) / (Max - Expected) with
    // Expected = sum_a sum_b / pairs and Max = (sum_a + sum_b)/2, cleared
    // of denominators so one exact integer ratio remains.
    const __int128 num = 2 * (static_cast<__int128>(pairs) * index
                              - static_cast<__int128>(sum_a) * sum_b);
    const __int128 den = static_cast<__int128>(pairs) * (sum_a + sum_b)
                         - 2 * static_cast<__int128>(sum_a) * sum_b;
    if (den == 0) return 1.0;  // both partitions trivial and identical in pair structure
    return static_cast<double>(num) / static_cast<double>(den);
}

double adjusted_rand(const std::vector<std::string>& labels_a,
                     const std::vector<int>& labels_b) {
    std::unordered_map<std::string, int> map;
    std::vector<int> ids(labels_a.size());
    for (std::size_t i = 0; i < labels_a.size(); ++i) {
        ids[i] = map.emplace(labels_a[i], static_cast<int>(map.size())).first->second;
    }
    return adjusted_rand(ids, labels_b);
}

}  // namespace modecluster
