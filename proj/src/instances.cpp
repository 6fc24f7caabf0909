#include "stickcut/instances.hpp"

#include <json.hpp>

#include <random>
#include <string_view>
#include <vector>

namespace stickcut {

Instance gen_example(std::uint64_t m, const Rational& x) {
    if (m == 0 || m % 4 != 0) {
        throw std::domain_error("gen_example: m must be a positive multiple of 4");
    }
    const Rational half_m(mpz_class(m), mpz_class(2));
    if (x < half_m) {
        throw std::domain_error("gen_example: x must be at least m/2");
    }
    Instance inst;
    const std::size_t n = static_cast<std::size_t>(m) * m;
    inst.sticks.reserve(n);
    for (std::uint64_t j = 0; j <= m / 2; ++j) {
        inst.sticks.push_back(Rational(m - j) * x + Rational(j));
    }
    const Rational filler = x - Rational(1);
    while (inst.sticks.size() < n) {
        inst.sticks.push_back(filler);
    }
    inst.k = 3 * m * m / 8 + 3 * m / 4;
    return inst;
}

Instance gen_primes(std::size_t n, std::uint64_t k) {
    if (n == 0) {
        throw std::domain_error("gen_primes: n must be positive");
    }
    std::vector<std::uint64_t> primes;
    std::size_t limit = 16;
    while (primes.size() < n) {
        limit *= 2;
        primes.clear();
        std::vector<bool> composite(limit + 1, false);
        for (std::size_t p = 2; p <= limit; ++p) {
            if (composite[p]) continue;
            primes.push_back(p);
            for (std::size_t q = p * p; q <= limit; q += p) {
                composite[q] = true;
            }
        }
    }
    Instance inst;
    inst.sticks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        inst.sticks.push_back(Rational(primes[n - 1 - i]));
    }
    inst.k = k;
    return inst;
}

Instance gen_random(std::size_t n, std::uint64_t k, std::uint64_t max_num,
                    std::uint64_t max_den, std::uint64_t seed) {
    if (n == 0 || k == 0 || max_num == 0 || max_den == 0) {
        throw std::domain_error("gen_random: all parameters must be positive");
    }
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.sticks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t a = 1 + rng() % max_num;
        const std::uint64_t b = 1 + rng() % max_den;
        inst.sticks.push_back(Rational(mpz_class(a), mpz_class(b)));
    }
    inst.k = k;
    return inst;
}

Instance parse_instance(const std::string& text) {
    if (std::string_view(text).starts_with("\xEF\xBB\xBF")) {
        throw ParseError("byte order mark not allowed");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("top level must be an object");
    }
    for (const auto& item : doc.items()) {
        if (item.key() != "k" && item.key() != "sticks") {
            throw ParseError("unknown field \"" + item.key() + "\"");
        }
    }
    if (!doc.contains("k")) {
        throw ParseError("missing field \"k\"");
    }
    if (!doc.contains("sticks")) {
        throw ParseError("missing field \"sticks\"");
    }
    const auto& k_field = doc["k"];
    if (!k_field.is_number_unsigned() || k_field.get<std::uint64_t>() < 1) {
        throw ParseError("k: must be a positive integer");
    }
    const auto& sticks_field = doc["sticks"];
    if (!sticks_field.is_array() || sticks_field.empty()) {
        throw ParseError("sticks: must be a non-empty array");
    }

    Instance inst;
    inst.k = k_field.get<std::uint64_t>();
    inst.sticks.reserve(sticks_field.size());
    for (std::size_t i = 0; i < sticks_field.size(); ++i) {
        const std::string field = "sticks[" + std::to_string(i) + "]";
        if (!sticks_field[i].is_string()) {
            throw ParseError(field + ": must be a rational string");
        }
        Rational length;
        try {
            length = parse_rational(sticks_field[i].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(field + ": " + e.what());
        }
        if (!length.is_positive()) {
            throw ParseError(field + ": non-positive length");
        }
        inst.sticks.push_back(std::move(length));
    }
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    nlohmann::json doc;
    doc["k"] = inst.k;
    auto& sticks = doc["sticks"] = nlohmann::json::array();
    for (const Rational& stick : inst.sticks) {
        sticks.push_back(to_string(stick));
    }
    return doc.dump() + "\n";
}

}  // namespace stickcut
