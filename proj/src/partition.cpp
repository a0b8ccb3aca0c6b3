#include "sheafloc/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sheafloc {

namespace {

void check_weight(unsigned long long w) {
    if (w > kMaxWeight) {
        throw std::invalid_argument("partition weight " + std::to_string(w) +
                                    " exceeds supported maximum " + std::to_string(kMaxWeight));
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

unsigned parse_unsigned(std::string_view tok, std::string_view context) {
    tok = trim(tok);
    unsigned value = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (tok.empty() || ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("malformed partition '" + std::string(context) +
                                    "': bad integer '" + std::string(tok) + "'");
    }
    return value;
}

}  // namespace

Partition::Partition(std::vector<unsigned> mult) : mult_(std::move(mult)) {
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
    unsigned long long w = 0;
    for (std::size_t k = 0; k < mult_.size(); ++k) {
        w += static_cast<unsigned long long>(k + 1) * mult_[k];
        check_weight(w);
    }
}

Partition Partition::from_parts(const std::vector<unsigned>& parts) {
    std::vector<unsigned> mult;
    unsigned long long w = 0;
    for (unsigned part : parts) {
        if (part == 0) throw std::invalid_argument("partition parts must be positive");
        w += part;
        check_weight(w);
        if (mult.size() < part) mult.resize(part, 0);
        ++mult[part - 1];
    }
    return Partition(std::move(mult));
}

unsigned Partition::multiplicity(unsigned size) const noexcept {
    if (size == 0 || size > mult_.size()) return 0;
    return mult_[size - 1];
}

std::vector<unsigned> Partition::parts() const {
    std::vector<unsigned> out;
    for (std::size_t k = mult_.size(); k-- > 0;) {
        out.insert(out.end(), mult_[k], static_cast<unsigned>(k + 1));
    }
    return out;
}

unsigned weight(const Partition& p) noexcept {
    unsigned w = 0;
    const auto& m = p.multiplicities();
    for (std::size_t k = 0; k < m.size(); ++k) w += static_cast<unsigned>(k + 1) * m[k];
    return w;
}

unsigned length(const Partition& p) noexcept {
    unsigned n = 0;
    for (unsigned m : p.multiplicities()) n += m;
    return n;
}

std::vector<Partition> enumerate_partitions(unsigned n) {
    check_weight(n);
    std::vector<Partition> out;
    std::vector<unsigned> mult(n, 0);
    // Largest part first, each next part no larger than the previous one.
    std::function<void(unsigned, unsigned)> recurse = [&](unsigned remaining, unsigned cap) {
        if (remaining == 0) {
            out.emplace_back(mult);
            return;
        }
        for (unsigned part = std::min(remaining, cap); part >= 1; --part) {
            ++mult[part - 1];
            recurse(remaining - part, part);
            --mult[part - 1];
        }
    };
    recurse(n, n);
    return out;
}

std::vector<std::pair<Partition, Partition>> enumerate_pairs(unsigned n) {
    check_weight(n);
    std::vector<std::vector<Partition>> table(n + 1);
    for (unsigned k = 0; k <= n; ++k) table[k] = enumerate_partitions(k);

    std::vector<std::pair<Partition, Partition>> out;
    for (unsigned k = n + 1; k-- > 0;) {
        for (const auto& alpha : table[k]) {
            for (const auto& beta : table[n - k]) out.emplace_back(alpha, beta);
        }
    }
    return out;
}

std::string to_exponent_string(const Partition& p) {
    if (p.empty()) return "[]";
    std::ostringstream os;
    bool first = true;
    for (unsigned size = 1; size <= p.max_part(); ++size) {
        const unsigned m = p.multiplicity(size);
        if (m == 0) continue;
        if (!first) os << ' ';
        os << size << '^' << m;
        first = false;
    }
    return os.str();
}

std::string to_part_list_string(const Partition& p) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (unsigned part : p.parts()) {
        if (!first) os << ',';
        os << part;
        first = false;
    }
    os << ']';
    return os.str();
}

Partition parse_partition(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty()) return {};

    if (body.front() == '[') {
        if (body.back() != ']') {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "': missing ']'");
        }
        const std::string_view inner = trim(body.substr(1, body.size() - 2));
        std::vector<unsigned> parts;
        if (!inner.empty()) {
            std::size_t start = 0;
            while (true) {
                const auto comma = inner.find(',', start);
                parts.push_back(parse_unsigned(inner.substr(start, comma - start), text));
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
        }
        return Partition::from_parts(parts);
    }

    std::vector<unsigned> mult;
    unsigned long long w = 0;
    std::istringstream is{std::string(body)};
    std::string tok;
    while (is >> tok) {
        const auto caret = tok.find('^');
        const unsigned size = parse_unsigned(std::string_view(tok).substr(0, caret), text);
        const unsigned count =
            caret == std::string::npos ? 1u : parse_unsigned(std::string_view(tok).substr(caret + 1), text);
        if (size == 0) {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "': part size 0");
        }
        w += static_cast<unsigned long long>(size) * count;
        check_weight(w);
        if (mult.size() < size) mult.resize(size, 0);
        mult[size - 1] += count;
    }
    return Partition(std::move(mult));
}

}  // namespace sheafloc
