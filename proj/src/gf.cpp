#include "hqcgmd/gf.hpp"

namespace hqc {

Field::Field(unsigned m, unsigned reduction_poly, Elem generator)
    : m_(m), order_((1u << m) - 1), poly_(reduction_poly), generator_(generator) {
    if (m < 2 || m > 12) throw std::invalid_argument("gf: m must be in [2, 12]");
    if ((reduction_poly >> m) != 1u)
        throw std::invalid_argument("gf: reduction polynomial must have degree m");
    exp_.assign(2 * order_, 0);
    log_.assign(1u << m, 0);
    unsigned x = 1;
    for (unsigned i = 0; i < order_; ++i) {
        if (x == 1 && i != 0)
            throw std::invalid_argument("gf: generator is not primitive");
        exp_[i] = static_cast<Elem>(x);
        log_[x] = i;
        // multiply by the generator via shift-and-reduce
        unsigned acc = 0;
        unsigned g = generator;
        unsigned v = x;
        while (g) {
            if (g & 1) acc ^= v;
            g >>= 1;
            v <<= 1;
            if (v >> m) v ^= reduction_poly;
        }
        x = acc;
    }
    if (x != 1) throw std::invalid_argument("gf: generator is not primitive");
    for (unsigned i = 0; i < order_; ++i) exp_[order_ + i] = exp_[i];
}

const Field& Field::gf256() {
    static const Field f(8, 0x11D, 0x02);
    return f;
}

Elem Field::mul_reduce(Elem a, Elem b) const {
    unsigned prod = 0;
    unsigned aa = a;
    unsigned bb = b;
    while (bb) {
        if (bb & 1) prod ^= aa;
        bb >>= 1;
        aa <<= 1;
    }
    // reduce the 2m-2 degree product
    for (int d = 2 * static_cast<int>(m_) - 2; d >= static_cast<int>(m_); --d)
        if (prod >> d) prod ^= poly_ << (d - m_);
    return static_cast<Elem>(prod);
}

int poly_deg(std::span<const Elem> p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i]) return i;
    return -1;
}

Poly poly_mul(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] ^= f.mul(a[i], b[j]);
    }
    return r;
}

}  // namespace hqc
