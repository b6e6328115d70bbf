#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hqc {

using Elem = std::uint16_t;
using Poly = std::vector<Elem>;

// Arithmetic over GF(2^m), m <= 12. Multiplication and inversion go through
// full log/antilog tables; mul_reduce() is the table-free shift-and-reduce
// path kept around as a cross-check.
class Field {
public:
    Field(unsigned m, unsigned reduction_poly, Elem generator);

    // GF(2^8) with x^8 + x^4 + x^3 + x^2 + 1 and alpha = 0x02, as used by HQC.
    static const Field& gf256();

    unsigned m() const { return m_; }
    unsigned order() const { return order_; }  // 2^m - 1
    Elem generator() const { return generator_; }
    unsigned reduction_poly() const { return poly_; }

    static Elem add(Elem a, Elem b) { return a ^ b; }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    // Carry-less multiply reduced modulo the field polynomial; no tables.
    Elem mul_reduce(Elem a, Elem b) const;

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("gf: inversion of zero");
        return exp_[order_ - log_[a]];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    // alpha^j for any integer j (negative allowed).
    Elem pow_alpha(long j) const {
        long r = j % static_cast<long>(order_);
        if (r < 0) r += order_;
        return exp_[r];
    }

    // x^e for arbitrary base.
    Elem pow(Elem x, long e) const {
        if (x == 0) return e == 0 ? Elem{1} : Elem{0};
        long r = (static_cast<long>(log_[x]) * (e % order_)) % order_;
        if (r < 0) r += order_;
        return exp_[r];
    }

    unsigned dlog(Elem a) const {
        if (a == 0) throw std::domain_error("gf: log of zero");
        return log_[a];
    }

    // Horner evaluation; coefficients lowest degree first.
    Elem poly_eval(std::span<const Elem> p, Elem x) const {
        Elem acc = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = add(mul(acc, x), *it);
        return acc;
    }

private:
    unsigned m_;
    unsigned order_;
    unsigned poly_;
    Elem generator_;
    std::vector<Elem> exp_;  // length 2*order, doubled to skip the mod in mul
    std::vector<unsigned> log_;
};

int poly_deg(std::span<const Elem> p);
Poly poly_mul(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace hqc
