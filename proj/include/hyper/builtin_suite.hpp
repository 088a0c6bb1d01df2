#pragma once

// The identity suite run by `hyperc suite`. Kept byte-identical to
// suites/triple_product.hid (checked by the test suite).

#include <string_view>

namespace hyper {

inline constexpr std::string_view kBuiltinSuite = R"HID(# Identities of the pair and triple product decompositions.
# One identity per line; `*` is applied exactly as parenthesized.

# --- elementary formulas
i0*u1 == u1
u1*i0 == u1
conj(u1) == 2*re(u1)*i0 - u1
u1*conj(u1) == normsq(u1)*i0
conj(u1)*u1 == normsq(u1)*i0
inner(u1,u2)*i0 == 1/2*(u1*conj(u2) + u2*conj(u1))
inner(u1,u2)*i0 == 1/2*(conj(u1)*u2 + conj(u2)*u1)
(u1*conj(u2))*u1 == 2*inner(u1,u2)*u1 - normsq(u1)*u2
u1*(conj(u2)*u1) == 2*inner(u1,u2)*u1 - normsq(u1)*u2
conj(u1*u2) == conj(u2)*conj(u1)
inner(u1*u2, i0) == inner(u1, conj(u2))
inner(u2*u1, i0) == inner(u1, conj(u2))
re((u1*u2)*u3) == re(u1*(u2*u3))
normsq(u1*u2) == normsq(u1)*normsq(u2)
(u1*u1)*u2 == u1*(u1*u2)
(u1*u2)*u2 == u1*(u2*u2)

# --- pair decomposition
u1*u2 == acomm(u1,u2) + cross(u1,u2)
inner(acomm(u1,u2), cross(u1,u2)) == 0
acomm(u1,u2) == re(u1)*u2 + re(u2)*u1 - inner(u1,u2)*i0
u1*u2 == re(u1)*u2 + re(u2)*u1 - inner(u1,u2)*i0 + cross(u1,u2)
inner(cross(u1,u2), i0) == 0
cross(i0,u1) == 0
cross(u1,i0) == 0
cross(u1,u2) == cross(im(u1),im(u2))
normsq(cross(u1,u2)) == normsq(im(u1))*normsq(im(u2)) - inner(im(u1),im(u2))*inner(im(u1),im(u2))
normsq(acomm(u1,u2)) == normsq(u1)*normsq(u2) - normsq(im(u1))*normsq(im(u2)) + inner(im(u1),im(u2))*inner(im(u1),im(u2))
normsq(acomm(u1,u2)) == inner(u1,u2)*inner(u1,u2) - 2*re(u1)*re(u2)*inner(u1,u2) + re(u1)*re(u1)*normsq(u2) + re(u2)*re(u2)*normsq(u1)
normsq(acomm(u1,u2)) + normsq(cross(u1,u2)) == normsq(u1)*normsq(u2)

# --- triple decomposition
(u1*conj(u2))*u3 == acomm3(u1,u2,u3) + cross3(u1,u2,u3) + assoc(u1,u2,u3)
inner(acomm3(u1,u2,u3), cross3(u1,u2,u3)) == 0
inner(acomm3(u1,u2,u3), assoc(u1,u2,u3)) == 0
inner(cross3(u1,u2,u3), assoc(u1,u2,u3)) == 0
acomm3(u1,u2,u3) == 1/2*((u1*conj(u2))*u3 + (u3*conj(u2))*u1)
acomm3(u1,u2,u3) == 1/2*(u1*(conj(u2)*u3) + u3*(conj(u2)*u1))
cross3(u1,u2,u3) == 1/2*((u1*conj(u2))*u3 - u3*(conj(u2)*u1))
cross3(u1,u2,u3) == 1/2*(u1*(conj(u2)*u3) - (u3*conj(u2))*u1)
assoc(u1,u2,u3) == 1/2*((u1*conj(u2))*u3 - u1*(conj(u2)*u3))
assoc(u1,u2,u3) == 1/2*(u3*(conj(u2)*u1) - (u3*conj(u2))*u1)
acomm3(u1,u2,u3) == inner(u1,u2)*u3 - inner(u1,u3)*u2 + inner(u2,u3)*u1
cross3(u1,u2,u3) == inner(cross(u1,u2),u3)*i0 - re(u1)*cross(u2,u3) + re(u2)*cross(u1,u3) - re(u3)*cross(u1,u2)

# --- unit substitution
acomm3(u1,u2,u3) == acomm3(u3,u2,u1)
acomm3(u1,i0,u3) == acomm(u1,u3)
cross3(u1,i0,u3) == cross(u1,u3)
cross3(i0,u2,u3) == -cross(u2,u3)
cross3(u1,u2,i0) == -cross(u1,u2)

# --- orthogonality and antisymmetry
inner(cross3(u1,u2,u3), u1) == 0
inner(cross3(u1,u2,u3), u2) == 0
inner(cross3(u1,u2,u3), u3) == 0
inner(assoc(u1,u2,u3), u1) == 0
inner(assoc(u1,u2,u3), u2) == 0
inner(assoc(u1,u2,u3), u3) == 0
inner(assoc(u1,u2,u3), i0) == 0
inner(assoc(u1,u2,u3), cross(u1,u2)) == 0
inner(assoc(u1,u2,u3), cross(u1,u3)) == 0
inner(assoc(u1,u2,u3), cross(u2,u3)) == 0
inner(cross3(u1,u2,u3), u4) == -inner(cross3(u4,u2,u3), u1)
inner(cross3(u1,u2,u3), u4) == -inner(cross3(u1,u4,u3), u2)
inner(cross3(u1,u2,u3), u4) == -inner(cross3(u1,u2,u4), u3)
inner(assoc(u1,u2,u3), u4) == -inner(assoc(u4,u2,u3), u1)
inner(assoc(u1,u2,u3), u4) == -inner(assoc(u1,u4,u3), u2)
inner(assoc(u1,u2,u3), u4) == -inner(assoc(u1,u2,u4), u3)
cross3(u1,u2,u1) == 0

# --- associator vanishing on quaternion subalgebras
assoc(i0,u2,u3) == 0
assoc(u1,i0,u3) == 0
assoc(u1,u2,i0) == 0
assoc(cross(u2,u3),u2,u3) == 0
@dims 1,2,4 assoc(u1,u2,u3) == 0

# --- squared lengths
normsq(acomm3(u1,u2,u3)) == normsq(u1)*normsq(u2)*normsq(u3) - gramdet(u1,u2,u3)
normsq(cross3(u1,u2,u3)) == inner(cross(u1,u2),u3)*inner(cross(u1,u2),u3) + gramdet(u1,u2,u3) - gramdet(im(u1),im(u2),im(u3))
normsq(assoc(u1,u2,u3)) == gramdet(im(u1),im(u2),im(u3)) - inner(cross(u1,u2),u3)*inner(cross(u1,u2),u3)
normsq(acomm3(u1,u2,u3)) + normsq(cross3(u1,u2,u3)) + normsq(assoc(u1,u2,u3)) == normsq(u1)*normsq(u2)*normsq(u3)
normsq((u1*conj(u2))*u3) == normsq(u1)*normsq(u2)*normsq(u3)

# --- conjugation parity and the mirrored product
conj(acomm3(conj(u1),conj(u2),conj(u3))) == acomm3(u1,u2,u3)
conj(cross3(conj(u1),conj(u2),conj(u3))) == -cross3(u1,u2,u3)
conj(assoc(conj(u1),conj(u2),conj(u3))) == assoc(u1,u2,u3)
u3*(conj(u2)*u1) == acomm3(u1,u2,u3) - cross3(u1,u2,u3) + assoc(u1,u2,u3)

# --- product of three factors without conjugation
(u1*u2)*u3 == 2*re(u2)*(u1*u3) - acomm3(u1,u2,u3) - cross3(u1,u2,u3) - assoc(u1,u2,u3)
)HID";

}  // namespace hyper
