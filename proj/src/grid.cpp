#include "qcvol/grid.hpp"

#include <json.hpp>

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qcvol {

namespace {

constexpr int kMaxGridDim = 24; // 2^d values have to fit in memory

void check_dim(int dim) {
    if (dim < 1 || dim > kMaxGridDim)
        throw std::invalid_argument("grid dimension must be in 1.." + std::to_string(kMaxGridDim) +
                                    "; got " + std::to_string(dim));
}

} // namespace

MultiIndex::MultiIndex(int dim, unsigned bits) : dim_(dim), bits_(bits) {
    check_dim(dim);
    if (dim < 32 && bits >= (1u << dim))
        throw std::invalid_argument("multi-index bits out of range for dimension " +
                                    std::to_string(dim));
}

int MultiIndex::ones() const {
    return std::popcount(bits_);
}

bool MultiIndex::is_upper(int coord) const {
    if (coord < 1 || coord > dim_)
        throw std::invalid_argument("coordinate out of range");
    return (bits_ >> (dim_ - coord)) & 1u;
}

MultiIndex MultiIndex::raised(int coord) const {
    if (is_upper(coord))
        throw std::invalid_argument("coordinate already at the upper endpoint");
    return MultiIndex(dim_, bits_ | (1u << (dim_ - coord)));
}

std::string MultiIndex::bitstring() const {
    std::string s(dim_, '0');
    for (int coord = 1; coord <= dim_; ++coord)
        if (is_upper(coord))
            s[coord - 1] = '1';
    return s;
}

MultiIndex MultiIndex::from_bitstring(std::string_view text) {
    const int dim = static_cast<int>(text.size());
    check_dim(dim);
    unsigned bits = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("multi-index bitstring must consist of 0s and 1s");
        bits = (bits << 1) | static_cast<unsigned>(ch - '0');
    }
    return MultiIndex(dim, bits);
}

Box::Box(std::vector<Rational> a, std::vector<Rational> b)
    : lower(std::move(a)), upper(std::move(b)) {
    if (lower.empty() || lower.size() != upper.size())
        throw std::invalid_argument("box needs matching nonempty edge vectors");
    check_dim(static_cast<int>(lower.size()));
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!(Rational(0) <= lower[i] && lower[i] < upper[i] && upper[i] <= Rational(1)))
            throw std::invalid_argument("box edges must satisfy 0 <= a < b <= 1 in coordinate " +
                                        std::to_string(i + 1));
    }
}

std::vector<Rational> Box::vertex(const MultiIndex& index) const {
    if (index.dim() != dim())
        throw std::invalid_argument("multi-index dimension does not match the box");
    std::vector<Rational> x;
    x.reserve(lower.size());
    for (int coord = 1; coord <= dim(); ++coord)
        x.push_back(index.is_upper(coord) ? upper[coord - 1] : lower[coord - 1]);
    return x;
}

GridQuasiCopula::GridQuasiCopula(Box box, std::vector<Rational> values)
    : box_(std::move(box)), values_(std::move(values)) {
    const std::size_t expected = std::size_t(1) << box_.dim();
    if (values_.size() != expected)
        throw std::invalid_argument("grid needs one value per vertex: expected " +
                                    std::to_string(expected) + ", got " +
                                    std::to_string(values_.size()));
}

Rational g_lower(const std::vector<Rational>& x) {
    Rational sum(0);
    for (const auto& v : x)
        sum += v;
    return sum - Rational(static_cast<long>(x.size())) + Rational(1);
}

Rational h_upper(const std::vector<Rational>& x) {
    if (x.empty())
        throw std::invalid_argument("h_upper of an empty point");
    Rational m = x[0];
    for (const auto& v : x)
        if (v < m)
            m = v;
    return m;
}

Rational volume(const GridQuasiCopula& grid) {
    const int d = grid.dim();
    Rational total(0);
    for (unsigned bits = 0; bits < (1u << d); ++bits) {
        const int ones = std::popcount(bits);
        if ((d - ones) % 2 == 0)
            total += grid.values()[bits];
        else
            total -= grid.values()[bits];
    }
    return total;
}

std::string describe(const Violation& violation) {
    std::ostringstream os;
    switch (violation.kind) {
    case ViolationKind::VertexLowerBound:
        os << "vertex " << violation.index.bitstring() << ": lower bound " << violation.lhs
           << " exceeds value " << violation.rhs;
        break;
    case ViolationKind::VertexUpperBound:
        os << "vertex " << violation.index.bitstring() << ": value " << violation.lhs
           << " exceeds upper bound " << violation.rhs;
        break;
    case ViolationKind::EdgeMonotonicity:
        os << "edge " << violation.index.bitstring() << " +e" << violation.coord << ": value "
           << violation.lhs << " decreases to " << violation.rhs;
        break;
    case ViolationKind::EdgeLipschitz:
        os << "edge " << violation.index.bitstring() << " +e" << violation.coord << ": increment "
           << violation.lhs << " exceeds edge length " << violation.rhs;
        break;
    }
    return os.str();
}

std::vector<Violation> validate(const GridQuasiCopula& grid) {
    const int d = grid.dim();
    const Box& box = grid.box();
    const auto& q = grid.values();
    std::vector<Violation> out;

    // g_lower at a vertex is the all-lower value plus the selected edge
    // lengths; h_upper is a running minimum over the selected endpoints.
    Rational base = Rational(1) - Rational(d);
    for (const auto& a : box.lower)
        base += a;
    std::vector<Rational> widths;
    for (int i = 0; i < d; ++i)
        widths.push_back(box.upper[i] - box.lower[i]);

    for (unsigned bits = 0; bits < (1u << d); ++bits) {
        const MultiIndex index(d, bits);
        Rational g = base;
        Rational h = index.is_upper(1) ? box.upper[0] : box.lower[0];
        for (int coord = 1; coord <= d; ++coord) {
            if (index.is_upper(coord)) {
                g += widths[coord - 1];
                if (box.upper[coord - 1] < h)
                    h = box.upper[coord - 1];
            } else if (box.lower[coord - 1] < h) {
                h = box.lower[coord - 1];
            }
        }
        const Rational lower_bound = g.sign() > 0 ? g : Rational(0);
        if (q[bits] < lower_bound)
            out.push_back({ViolationKind::VertexLowerBound, index, 0, lower_bound, q[bits]});
        if (q[bits] > h)
            out.push_back({ViolationKind::VertexUpperBound, index, 0, q[bits], h});

        for (int coord = 1; coord <= d; ++coord) {
            if (index.is_upper(coord))
                continue;
            const unsigned other = bits | (1u << (d - coord));
            const Rational diff = q[other] - q[bits];
            if (diff.sign() < 0)
                out.push_back({ViolationKind::EdgeMonotonicity, index, coord, q[bits], q[other]});
            if (diff > widths[coord - 1])
                out.push_back({ViolationKind::EdgeLipschitz, index, coord, diff, widths[coord - 1]});
        }
    }
    return out;
}

GridQuasiCopula symmetric_grid(const ClosedFormSolution& sol) {
    const int d = sol.d;
    check_dim(d);
    if (static_cast<int>(sol.q_levels.size()) != d + 1)
        throw std::invalid_argument("solution carries " + std::to_string(sol.q_levels.size()) +
                                    " level values; expected " + std::to_string(d + 1));
    Box box(std::vector<Rational>(d, sol.box_edge_a), std::vector<Rational>(d, sol.box_edge_b));
    std::vector<Rational> values;
    values.reserve(std::size_t(1) << d);
    for (unsigned bits = 0; bits < (1u << d); ++bits)
        values.push_back(sol.q_levels[std::popcount(bits)]);
    return GridQuasiCopula(std::move(box), std::move(values));
}

std::string to_json_string(const GridQuasiCopula& grid) {
    nlohmann::json j;
    j["d"] = grid.dim();
    nlohmann::json a = nlohmann::json::array();
    nlohmann::json b = nlohmann::json::array();
    for (int i = 0; i < grid.dim(); ++i) {
        a.push_back(to_string(grid.box().lower[i]));
        b.push_back(to_string(grid.box().upper[i]));
    }
    j["a"] = std::move(a);
    j["b"] = std::move(b);
    nlohmann::json q = nlohmann::json::object();
    for (unsigned bits = 0; bits < (1u << grid.dim()); ++bits)
        q[MultiIndex(grid.dim(), bits).bitstring()] = to_string(grid.values()[bits]);
    j["q"] = std::move(q);
    return j.dump();
}

GridQuasiCopula grid_from_json_string(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("grid JSON is not parseable: ") + e.what());
    }
    auto fail = [](const std::string& what) { return std::runtime_error("grid JSON: " + what); };
    if (!j.is_object() || !j.contains("d") || !j.contains("a") || !j.contains("b") ||
        !j.contains("q"))
        throw fail("expected an object with keys d, a, b, q");
    if (!j["d"].is_number_integer())
        throw fail("d must be an integer");
    const int d = j["d"].get<int>();
    check_dim(d);
    auto edge = [&](const char* key) {
        if (!j[key].is_array() || j[key].size() != static_cast<std::size_t>(d))
            throw fail(std::string(key) + " must be an array of " + std::to_string(d) +
                       " rationals");
        std::vector<Rational> v;
        for (const auto& item : j[key])
            v.push_back(parse_rational(item.get<std::string>()));
        return v;
    };
    Box box(edge("a"), edge("b"));
    if (!j["q"].is_object())
        throw fail("q must be an object keyed by bitstrings");
    const std::size_t expected = std::size_t(1) << d;
    std::vector<Rational> values(expected);
    std::vector<bool> seen(expected, false);
    for (const auto& [key, val] : j["q"].items()) {
        if (key.size() != static_cast<std::size_t>(d))
            throw fail("vertex key \"" + key + "\" does not have " + std::to_string(d) + " bits");
        const MultiIndex index = MultiIndex::from_bitstring(key);
        values[index.bits()] = parse_rational(val.get<std::string>());
        seen[index.bits()] = true;
    }
    for (unsigned bits = 0; bits < expected; ++bits)
        if (!seen[bits])
            throw fail("missing vertex " + MultiIndex(d, bits).bitstring());
    return GridQuasiCopula(std::move(box), std::move(values));
}

} // namespace qcvol
