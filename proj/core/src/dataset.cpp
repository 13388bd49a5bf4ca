#include "spcp/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "spcp/error.hpp"
#include "spcp/io_util.hpp"
#include "spcp/numerics.hpp"
#include "spcp/rng.hpp"

namespace spcp {

int LabeledSet::num_classes() const {
    int k = 0;
    for (int y : labels) k = std::max(k, y + 1);
    return k;
}

namespace {

void validate_spec(const BlobSpec& spec) {
    require(spec.num_classes >= 1, "blob spec: num_classes must be >= 1");
    require(spec.dim >= 1, "blob spec: dim must be >= 1");
    require(spec.sigma > 0.0, "blob spec: sigma must be > 0");
    require(spec.n_per_class >= 1, "blob spec: n_per_class must be >= 1");
    require(spec.means.rows() == static_cast<std::size_t>(spec.num_classes) &&
                spec.means.cols() == static_cast<std::size_t>(spec.dim),
            "blob spec: means must be num_classes x dim");
}

}  // namespace

LabeledSet gen_blobs(const BlobSpec& spec) {
    validate_spec(spec);
    const std::size_t n = static_cast<std::size_t>(spec.num_classes) * spec.n_per_class;
    LabeledSet out;
    out.features = Matrix(n, spec.dim);
    out.labels.resize(n);
    Rng rng(spec.seed);
    std::size_t row = 0;
    for (int k = 0; k < spec.num_classes; ++k) {
        for (int s = 0; s < spec.n_per_class; ++s, ++row) {
            for (int j = 0; j < spec.dim; ++j)
                out.features(row, j) = spec.means(k, j) + spec.sigma * rng.next_normal();
            out.labels[row] = k;
        }
    }
    return out;
}

UnlabeledSet gen_near_ood(const BlobSpec& spec, int n, std::uint64_t seed) {
    validate_spec(spec);
    require(spec.num_classes >= 2, "gen_near_ood: needs at least 2 classes for midpoints");
    require(n >= 1, "gen_near_ood: n must be >= 1");

    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < spec.num_classes; ++a)
        for (int b = a + 1; b < spec.num_classes; ++b) pairs.emplace_back(a, b);

    UnlabeledSet out;
    out.name = "near";
    out.features = Matrix(n, spec.dim);
    Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        const auto& [a, b] = pairs[static_cast<std::size_t>(i) % pairs.size()];
        for (int j = 0; j < spec.dim; ++j) {
            double mid = 0.5 * (spec.means(a, j) + spec.means(b, j));
            out.features(i, j) = mid + spec.sigma * rng.next_normal();
        }
    }
    return out;
}

UnlabeledSet gen_far_ood(int dim, int n, double box_halfwidth, double id_radius,
                         std::uint64_t seed) {
    require(dim >= 1, "gen_far_ood: dim must be >= 1");
    require(n >= 1, "gen_far_ood: n must be >= 1");
    require(box_halfwidth > id_radius,
            "gen_far_ood: box halfwidth " + format_double(box_halfwidth) +
                " must exceed the ID radius " + format_double(id_radius));

    UnlabeledSet out;
    out.name = "far";
    out.features = Matrix(n, dim);
    Rng rng(seed);
    long long attempts = 0;
    Vec candidate(dim);
    for (int i = 0; i < n; ++i) {
        for (;;) {
            ++attempts;
            for (int j = 0; j < dim; ++j)
                candidate[j] = box_halfwidth * (2.0 * rng.next_double() - 1.0);
            if (l2_norm(candidate) > id_radius) break;
            // Acceptance below 1% means the ID ball nearly fills the box.
            if (attempts >= 1000 && static_cast<double>(i) / static_cast<double>(attempts) < 0.01)
                throw Error("gen_far_ood: acceptance rate below 1% -- ID ball of radius " +
                            format_double(id_radius) + " nearly fills the box of halfwidth " +
                            format_double(box_halfwidth));
        }
        for (int j = 0; j < dim; ++j) out.features(i, j) = candidate[j];
    }
    return out;
}

UnlabeledSet gen_gaussian_noise(int dim, int n, std::uint64_t seed) {
    require(dim >= 1, "gen_gaussian_noise: dim must be >= 1");
    require(n >= 1, "gen_gaussian_noise: n must be >= 1");
    UnlabeledSet out;
    out.name = "noise";
    out.features = Matrix(n, dim);
    Rng rng(seed);
    for (auto& x : out.features.data()) x = rng.next_normal();
    return out;
}

std::pair<LabeledSet, LabeledSet> split_stratified(const LabeledSet& set, double test_fraction,
                                                   std::uint64_t seed) {
    require(set.size() > 0, "split_stratified: empty set");
    require(test_fraction >= 0.0 && test_fraction <= 1.0,
            "split_stratified: fraction must lie in [0, 1]");

    const int k = set.num_classes();
    std::vector<std::vector<std::size_t>> by_class(k);
    for (std::size_t i = 0; i < set.size(); ++i) by_class[set.labels[i]].push_back(i);

    Rng rng(seed);
    std::vector<bool> in_test(set.size(), false);
    for (int c = 0; c < k; ++c) {
        auto& idx = by_class[c];
        // Seeded Fisher-Yates, then the first n_test entries go to test.
        for (std::size_t i = idx.size(); i > 1; --i)
            std::swap(idx[i - 1], idx[rng.next_below(i)]);
        auto n_test = static_cast<std::size_t>(std::floor(test_fraction * static_cast<double>(idx.size())));
        for (std::size_t i = 0; i < n_test; ++i) in_test[idx[i]] = true;
    }

    auto gather = [&](bool want_test) {
        LabeledSet part;
        std::size_t count = 0;
        for (std::size_t i = 0; i < set.size(); ++i) count += (in_test[i] == want_test);
        part.features = Matrix(count, set.dim());
        part.labels.reserve(count);
        std::size_t row = 0;
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (in_test[i] != want_test) continue;
            for (std::size_t j = 0; j < set.dim(); ++j) part.features(row, j) = set.features(i, j);
            part.labels.push_back(set.labels[i]);
            ++row;
        }
        return part;
    };
    return {gather(false), gather(true)};
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    return cells;
}

double parse_double_cell(const std::string& cell, std::size_t line_no) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(end[-1]))) --end;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw Error("line " + std::to_string(line_no) + ": non-numeric cell '" + cell + "'");
    return value;
}

int parse_label_cell(const std::string& cell, std::size_t line_no) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw Error("line " + std::to_string(line_no) + ": label '" + cell + "' is not an integer");
    if (value < 0)
        throw Error("line " + std::to_string(line_no) + ": label " + std::to_string(value) +
                    " out of range (must be >= 0)");
    return value;
}

std::string feature_header(std::size_t d, bool labeled) {
    std::string h = labeled ? "label" : "";
    for (std::size_t j = 0; j < d; ++j) {
        if (!h.empty()) h += ',';
        h += 'f' + std::to_string(j);
    }
    return h;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::string text = read_file(path);
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

void save_csv(const LabeledSet& set, const std::string& path) {
    require(set.size() > 0, "save_csv: empty labeled set");
    std::string out = feature_header(set.dim(), true) + '\n';
    for (std::size_t i = 0; i < set.size(); ++i) {
        out += std::to_string(set.labels[i]);
        for (std::size_t j = 0; j < set.dim(); ++j) {
            out += ',';
            out += format_double(set.features(i, j));
        }
        out += '\n';
    }
    atomic_write_file(path, out);
}

void save_csv(const UnlabeledSet& set, const std::string& path) {
    require(set.size() > 0, "save_csv: empty unlabeled set");
    std::string out = feature_header(set.dim(), false) + '\n';
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = 0; j < set.dim(); ++j) {
            if (j) out += ',';
            out += format_double(set.features(i, j));
        }
        out += '\n';
    }
    atomic_write_file(path, out);
}

LabeledSet load_labeled_csv(const std::string& path) {
    auto lines = read_lines(path);
    require(!lines.empty(), "'" + path + "': empty file");
    auto header = split_line(lines[0]);
    require(!header.empty() && header[0] == "label",
            "'" + path + "' line 1: labeled CSV must start with 'label' column");
    const std::size_t d = header.size() - 1;
    require(d >= 1, "'" + path + "' line 1: no feature columns");
    for (std::size_t j = 0; j < d; ++j)
        require(header[j + 1] == "f" + std::to_string(j),
                "'" + path + "' line 1: malformed header column '" + header[j + 1] + "'");

    const std::size_t n = lines.size() - 1;
    require(n >= 1, "'" + path + "': no data rows");
    LabeledSet set;
    set.features = Matrix(n, d);
    set.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t line_no = i + 2;
        auto cells = split_line(lines[i + 1]);
        if (cells.size() != d + 1)
            throw Error("'" + path + "' line " + std::to_string(line_no) + ": expected " +
                        std::to_string(d + 1) + " cells, got " + std::to_string(cells.size()));
        set.labels[i] = parse_label_cell(cells[0], line_no);
        for (std::size_t j = 0; j < d; ++j)
            set.features(i, j) = parse_double_cell(cells[j + 1], line_no);
    }
    return set;
}

UnlabeledSet load_unlabeled_csv(const std::string& path) {
    auto lines = read_lines(path);
    require(!lines.empty(), "'" + path + "': empty file");
    auto header = split_line(lines[0]);
    const std::size_t d = header.size();
    require(d >= 1 && header[0] == "f0",
            "'" + path + "' line 1: unlabeled CSV must start with 'f0' column");
    for (std::size_t j = 0; j < d; ++j)
        require(header[j] == "f" + std::to_string(j),
                "'" + path + "' line 1: malformed header column '" + header[j] + "'");

    const std::size_t n = lines.size() - 1;
    require(n >= 1, "'" + path + "': no data rows");
    UnlabeledSet set;
    set.name = stem_of(path);
    set.features = Matrix(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t line_no = i + 2;
        auto cells = split_line(lines[i + 1]);
        if (cells.size() != d)
            throw Error("'" + path + "' line " + std::to_string(line_no) + ": expected " +
                        std::to_string(d) + " cells, got " + std::to_string(cells.size()));
        for (std::size_t j = 0; j < d; ++j)
            set.features(i, j) = parse_double_cell(cells[j], line_no);
    }
    return set;
}

}  // namespace spcp
