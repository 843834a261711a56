#include "dcoh/fg_group.hpp"

#include <algorithm>
#include <cctype>

namespace dcoh {

FgAbGroup FgAbGroup::cyclic(const Integer& order) { return from_cyclic_orders({order}); }

FgAbGroup FgAbGroup::from_cyclic_orders(const std::vector<Integer>& orders)
{
    FgAbGroup g;
    std::vector<Integer> finite;
    for (const auto& o : orders) {
        if (o < 0) throw InputError("negative cyclic order " + dcoh::to_string(o));
        if (o == 0) ++g.free_rank;
        else if (o > 1) finite.push_back(o);
    }
    // Split every order into prime powers, then regroup by position.
    std::vector<std::pair<Integer, std::vector<Integer>>> by_prime;
    for (Integer n : finite) {
        for (Integer p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            Integer pk = 1;
            while (n % p == 0) {
                n /= p;
                pk *= p;
            }
            auto it = std::find_if(by_prime.begin(), by_prime.end(), [&](const auto& e) { return e.first == p; });
            if (it == by_prime.end()) by_prime.push_back({p, {pk}});
            else it->second.push_back(pk);
        }
        if (n > 1) {
            auto it = std::find_if(by_prime.begin(), by_prime.end(), [&](const auto& e) { return e.first == n; });
            if (it == by_prime.end()) by_prime.push_back({n, {n}});
            else it->second.push_back(n);
        }
    }
    std::size_t len = 0;
    for (auto& [p, powers] : by_prime) {
        std::sort(powers.begin(), powers.end());
        len = std::max(len, powers.size());
    }
    std::vector<Integer> invariant(len, Integer(1));
    for (auto& [p, powers] : by_prime) {
        // Largest powers go to the last invariant factors.
        for (std::size_t i = 0; i < powers.size(); ++i) invariant[len - powers.size() + i] *= powers[i];
    }
    g.torsion = std::move(invariant);
    return g;
}

FgAbGroup FgAbGroup::parse(std::string_view text)
{
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char ch = static_cast<unsigned char>(text[i]);
        if (std::isspace(ch)) continue;
        // UTF-8 "⊕" is E2 8A 95.
        if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x8A &&
            static_cast<unsigned char>(text[i + 2]) == 0x95) {
            s.push_back('+');
            i += 2;
            continue;
        }
        s.push_back(static_cast<char>(ch));
    }
    if (s.empty()) throw InputError("empty group specification");
    if (s == "0") return trivial();
    std::vector<Integer> orders;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find_first_of("+x", pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (term.empty() || term[0] != 'Z') {
            if (term == "0") {
                // allowed as a summand
            } else {
                throw InputError("bad group summand '" + term + "' in '" + std::string(text) + "'");
            }
        } else if (term == "Z") {
            orders.push_back(0);
        } else if (term[1] == '^') {
            auto k = parse_integer(term.substr(2));
            if (k < 0) throw InputError("bad exponent in '" + term + "'");
            for (Integer i = 0; i < k; ++i) orders.push_back(0);
        } else if (term[1] == '/') {
            auto d = parse_integer(term.substr(2));
            if (d <= 0) throw InputError("bad cyclic order in '" + term + "'");
            orders.push_back(d);
        } else {
            throw InputError("bad group summand '" + term + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return from_cyclic_orders(orders);
}

Integer FgAbGroup::order() const
{
    if (!is_finite()) throw InputError("order of an infinite group requested");
    Integer n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

Integer FgAbGroup::exponent() const { return torsion.empty() ? Integer(1) : torsion.back(); }

std::vector<Integer> FgAbGroup::moduli() const
{
    std::vector<Integer> m = torsion;
    m.resize(torsion.size() + free_rank, Integer(0));
    return m;
}

IntVector FgAbGroup::reduce(IntVector coords) const
{
    for (std::size_t i = 0; i < torsion.size() && i < coords.size(); ++i) coords[i] = mod_floor(coords[i], torsion[i]);
    return coords;
}

std::string FgAbGroup::to_string() const
{
    if (is_trivial()) return "0";
    std::string out;
    auto append = [&](const std::string& term) {
        if (!out.empty()) out += " + ";
        out += term;
    };
    if (free_rank == 1) append("Z");
    else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
    for (const auto& d : torsion) append("Z/" + dcoh::to_string(d));
    return out;
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b)
{
    std::vector<Integer> orders = a.moduli();
    auto mb = b.moduli();
    orders.insert(orders.end(), mb.begin(), mb.end());
    return FgAbGroup::from_cyclic_orders(orders);
}

FgAbGroup power(const FgAbGroup& g, std::size_t n)
{
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < n; ++i) {
        auto m = g.moduli();
        orders.insert(orders.end(), m.begin(), m.end());
    }
    return FgAbGroup::from_cyclic_orders(orders);
}

}  // namespace dcoh
