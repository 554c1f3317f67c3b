#include "lpa/field.hpp"

#include <stdexcept>

namespace lpa {

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime_power(const mpz_class& n) {
    if (n < 2) return false;
    if (is_prime(n)) return true;
    // n = p^k requires k <= log2(n); take exact k-th roots and test the base.
    const std::size_t maxk = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= maxk; ++k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0 && is_prime(root)) return true;
    }
    return false;
}

unsigned long p_valuation(const mpz_class& n, const mpz_class& p) {
    if (n == 0) throw std::invalid_argument("p_valuation of 0");
    mpz_class rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

FieldSpec FieldSpec::finite_field(const mpz_class& q) {
    if (!is_prime_power(q)) throw std::invalid_argument("finite field size must be a prime power >= 2");
    FieldSpec f;
    f.kind = Kind::FiniteField;
    f.q = q;
    return f;
}

FieldSpec FieldSpec::alg_closed(const mpz_class& characteristic) {
    if (characteristic != 0 && !is_prime(characteristic)) {
        throw std::invalid_argument("algebraically closed characteristic must be 0 or a prime");
    }
    FieldSpec f;
    f.kind = Kind::AlgClosed;
    f.characteristic = characteristic;
    return f;
}

FieldSpec FieldSpec::number_field(int r1, int r2) {
    if (r1 < 0 || r2 < 0 || r1 + 2 * r2 < 1) {
        throw std::invalid_argument("number field needs r1, r2 >= 0 with r1 + 2*r2 >= 1");
    }
    FieldSpec f;
    f.kind = Kind::NumberField;
    f.r1 = r1;
    f.r2 = r2;
    return f;
}

std::string FieldSpec::to_string() const {
    switch (kind) {
        case Kind::FiniteField: return "fq:" + q.get_str();
        case Kind::AlgClosed: return "algclosed:" + characteristic.get_str();
        case Kind::NumberField: return "nf:" + std::to_string(r1) + "," + std::to_string(r2);
    }
    return "?";
}

int compare(const FieldSpec& a, const FieldSpec& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
    int c = cmp(a.q, b.q);
    if (c != 0) return c;
    c = cmp(a.characteristic, b.characteristic);
    if (c != 0) return c;
    if (a.r1 != b.r1) return a.r1 < b.r1 ? -1 : 1;
    if (a.r2 != b.r2) return a.r2 < b.r2 ? -1 : 1;
    return 0;
}

FieldSpec parse_field_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("field spec must be fq:<q>, algclosed:<0|p>, or nf:<r1>,<r2>");
    }
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    try {
        if (head == "fq") {
            return FieldSpec::finite_field(mpz_class(rest));
        }
        if (head == "algclosed") {
            return FieldSpec::alg_closed(mpz_class(rest));
        }
        if (head == "nf") {
            auto comma = rest.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("nf spec needs r1,r2");
            return FieldSpec::number_field(std::stoi(rest.substr(0, comma)),
                                           std::stoi(rest.substr(comma + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse field spec: " + text);
    }
    throw std::invalid_argument("unknown field family: " + head);
}

}  // namespace lpa
