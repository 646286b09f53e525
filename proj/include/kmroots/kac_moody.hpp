#pragma once
#include "kmroots/cartan.hpp"

namespace kmroots {

enum class KacMoodyKind { not_a_root, real, imaginary };

// Exact root membership for any generalized Cartan matrix. A positive vector
// is reflected down by simple reflections that lower its height until it is
// a simple root (real), leaves the positive cone (not a root), or lands in
// the fundamental chamber of imaginary roots with connected support.
KacMoodyKind classify_kac_moody(const IntMatrix& cartan, Vec v);

}  // namespace kmroots
