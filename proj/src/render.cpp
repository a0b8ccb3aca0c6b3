#include "sheafloc/render.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace sheafloc {

namespace {

Json dimension_value(const BigInt& d) {
    if (d <= std::numeric_limits<std::uint64_t>::max()) return d.convert_to<std::uint64_t>();
    return d.str();
}

}  // namespace

std::string to_polynomial_string(const GradedDims& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, d] : g.entries()) {
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << d;
            continue;
        }
        if (d != 1) os << d;
        os << 't';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

Json to_json(const GradedDims& g) {
    Json j = Json::object();
    for (const auto& [k, d] : g.entries()) j[std::to_string(k)] = dimension_value(d);
    return j;
}

GradedDims graded_dims_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("graded dimensions must be a JSON object");
    GradedDims g;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        unsigned long degree = 0;
        try {
            degree = std::stoul(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || key.empty() || degree > std::numeric_limits<unsigned>::max()) {
            throw std::invalid_argument("bad degree key '" + key + "'");
        }
        if (value.is_number_unsigned()) {
            g.add(static_cast<unsigned>(degree), BigInt(value.get<std::uint64_t>()));
        } else if (value.is_string()) {
            g.add(static_cast<unsigned>(degree), BigInt(value.get<std::string>()));
        } else {
            throw std::invalid_argument("bad dimension for degree " + key);
        }
    }
    return g;
}

std::string to_csv(const GradedDims& g) {
    std::ostringstream os;
    os << "degree,dimension\n";
    if (const auto top = g.top_degree()) {
        for (unsigned k = 0; k <= *top; ++k) os << k << ',' << g[k] << '\n';
    }
    return os.str();
}

std::string to_text(const WeightMultiset& ms) {
    std::ostringstream os;
    for (const auto& [w, m] : ms.entries()) os << w << " × " << m << '\n';
    return os.str();
}

Json to_json(const WeightMultiset& ms) {
    Json arr = Json::array();
    for (const auto& [w, m] : ms.entries()) arr.push_back({{"weight", w}, {"multiplicity", m}});
    return arr;
}

Json to_json(const Partition& p) {
    Json arr = Json::array();
    for (unsigned part : p.parts()) arr.push_back(part);
    return arr;
}

Json betti_report_json(const ChernInvariants& chern, const LWindow& window,
                       const std::vector<ComponentContribution>& contributions, const GradedDims& total) {
    Json j;
    j["lprime"] = chern.lprime;
    j["c2"] = chern.c2;
    j["l_window"] = Json::array({window.min, window.max});
    Json comps = Json::array();
    for (const auto& c : contributions) {
        Json e;
        e["l"] = c.component.l;
        e["alpha"] = to_json(c.component.alpha);
        e["beta"] = to_json(c.component.beta);
        e["shift"] = c.shift;
        e["poincare"] = to_json(c.homology);
        comps.push_back(std::move(e));
    }
    j["components"] = std::move(comps);
    j["total"] = to_json(total);
    return j;
}

Json to_json(const SplittingType& s) {
    Json j;
    j["d"] = s.d;
    j["dprime"] = s.dprime;
    j["degB1"] = s.degB1;
    j["c2I1"] = s.c2I1;
    j["c2I2"] = s.c2I2;
    j["degE"] = s.degE;
    j["F"] = s.F;
    return j;
}

}  // namespace sheafloc
