#include "qcong/detail/kronecker.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace qcong::detail {

namespace {

struct Profile {
    std::size_t max_bits = 0;
    std::size_t nonzero = 0;
};

Profile profile(std::span<const Int> a) {
    Profile p;
    for (const auto& c : a) {
        if (sgn(c) == 0) continue;
        ++p.nonzero;
        p.max_bits = std::max(p.max_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    }
    return p;
}

Int pack(std::span<const Int> a, std::size_t slot_limbs) {
    const std::size_t total = a.size() * slot_limbs;
    Int pos, neg;
    mp_limb_t* p = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(total));
    mp_limb_t* n = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(total));
    std::fill(p, p + total, mp_limb_t{0});
    std::fill(n, n + total, mp_limb_t{0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        const mpz_srcptr c = a[i].get_mpz_t();
        const int s = mpz_sgn(c);
        if (s == 0) continue;
        const std::size_t sz = mpz_size(c);
        assert(sz <= slot_limbs);
        const mp_limb_t* src = mpz_limbs_read(c);
        std::copy(src, src + sz, (s > 0 ? p : n) + i * slot_limbs);
    }
    mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(total));
    mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(total));
    return pos - neg;
}

std::vector<Int> unpack(const Int& packed, std::size_t slot_limbs, std::size_t count) {
    std::vector<Int> out(count);
    const int sign = sgn(packed);
    if (sign == 0) return out;
    Int magnitude = abs(packed);
    const mp_limb_t* limbs = mpz_limbs_read(magnitude.get_mpz_t());
    const std::size_t size = mpz_size(magnitude.get_mpz_t());

    const std::size_t slot_bits = slot_limbs * GMP_NUMB_BITS;
    Int half, full;
    mpz_setbit(half.get_mpz_t(), slot_bits - 1);
    mpz_setbit(full.get_mpz_t(), slot_bits);

    bool carry = false;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t lo = i * slot_limbs;
        Int digit;
        if (lo < size) {
            const std::size_t len = std::min(slot_limbs, size - lo);
            mpz_t view;
            mpz_roinit_n(view, limbs + lo, static_cast<mp_size_t>(len));
            mpz_set(digit.get_mpz_t(), view);
        }
        if (carry) digit += 1;
        if (digit >= half) {
            digit -= full;
            carry = true;
        } else {
            carry = false;
        }
        out[i] = sign < 0 ? Int(-digit) : digit;
    }
    if (carry || size > count * slot_limbs)
        throw std::logic_error("kronecker_multiply: coefficient bound violated");
    return out;
}

}  // namespace

std::vector<Int> schoolbook_multiply(std::span<const Int> a, std::span<const Int> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

std::vector<Int> kronecker_multiply(std::span<const Int> a, std::span<const Int> b) {
    if (a.empty() || b.empty()) return {};
    const Profile pa = profile(a);
    const Profile pb = profile(b);
    const std::size_t count = a.size() + b.size() - 1;
    if (pa.nonzero == 0 || pb.nonzero == 0) return std::vector<Int>(count);

    // |product coefficient| < 2^bound; one spare bit for the balanced digit sign.
    const std::size_t terms = std::min(pa.nonzero, pb.nonzero);
    const std::size_t bound = pa.max_bits + pb.max_bits + std::bit_width(terms);
    const std::size_t slot_limbs = bound / GMP_NUMB_BITS + 1;

    const Int product = pack(a, slot_limbs) * pack(b, slot_limbs);
    return unpack(product, slot_limbs, count);
}

std::vector<Int> multiply_dense(std::span<const Int> a, std::span<const Int> b) {
    if (std::min(a.size(), b.size()) < 24) return schoolbook_multiply(a, b);
    return kronecker_multiply(a, b);
}

}  // namespace qcong::detail
