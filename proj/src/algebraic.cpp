#include "umlab/algebraic.hpp"

#include <algorithm>

namespace umlab::exactnum {

using polyring::RatPoly;

Interval eval_interval(const IntPoly& f, const Interval& x) {
    Interval acc = Interval::point(Rational(0));
    for (size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * x + Rational(f[i]);
    return acc;
}

ComplexBox eval_box(const IntPoly& f, const ComplexBox& z) {
    ComplexBox acc = ComplexBox::point(Rational(0), Rational(0));
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + Rational(f[i]);
    }
    return acc;
}

std::pair<Rational, Rational> eval_gaussian(const IntPoly& f, const Rational& re,
                                            const Rational& im) {
    Rational ar(0), ai(0);
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        // (ar + i*ai) * (re + i*im) + c
        Rational nr = ar * re - ai * im + Rational(f[i]);
        Rational ni = ar * im + ai * re;
        ar = std::move(nr);
        ai = std::move(ni);
    }
    return {ar, ai};
}

namespace {

struct BoundaryRootNear : Error {
    BoundaryRootNear() : Error("root on or near box boundary") {}
};

struct GaussianPoint {
    Rational re, im;
};

// Walks one axis-parallel segment from t=0 to t=1, bisecting until the image
// box of every piece excludes zero; appends the exact image vertices of the
// interior breakpoints plus the endpoint (the start vertex is appended by the
// previous edge).
void walk_edge(const IntPoly& f, const Rational& re0, const Rational& im0, const Rational& re1,
               const Rational& im1, std::vector<GaussianPoint>& vertices, int depth_budget) {
    ComplexBox seg(Interval(std::min(re0, re1), std::max(re0, re1)),
                   Interval(std::min(im0, im1), std::max(im0, im1)));
    ComplexBox image = eval_box(f, seg);
    if (!image.contains_zero()) {
        auto [vr, vi] = eval_gaussian(f, re1, im1);
        vertices.push_back({vr, vi});
        return;
    }
    if (depth_budget <= 0) throw BoundaryRootNear();
    const Rational rem = (re0 + re1) / 2, imm = (im0 + im1) / 2;
    walk_edge(f, re0, im0, rem, imm, vertices, depth_budget - 1);
    walk_edge(f, rem, imm, re1, im1, vertices, depth_budget - 1);
}

// Winding number of the closed polygon around the origin; all vertices exact.
// Throws if the path passes through the origin.
int polygon_winding(const std::vector<GaussianPoint>& poly) {
    int winding = 0;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const GaussianPoint& a = poly[i];
        const GaussianPoint& b = poly[(i + 1) % n];
        if (sgn(a.re) == 0 && sgn(a.im) == 0) throw BoundaryRootNear();
        // crossing of the positive real axis (y = 0, x > 0)
        const int sa = sgn(a.im), sb = sgn(b.im);
        const bool up = sa <= 0 && sb > 0;
        const bool down = sb <= 0 && sa > 0;
        if (!up && !down) {
            // A segment lying on the real axis through positive x with a sign
            // change cannot occur here; segments with both endpoints on the
            // axis contribute nothing.
            continue;
        }
        // orientation of (a -> b -> origin)
        const Rational orient = (b.re - a.re) * (Rational(0) - a.im) - (b.im - a.im) * (Rational(0) - a.re);
        const int so = sgn(orient);
        if (so == 0) throw BoundaryRootNear(); // origin on the segment line within the crossing
        if (up && so > 0) ++winding;
        if (down && so < 0) --winding;
    }
    return winding;
}

} // namespace

int winding_number(const IntPoly& f, const ComplexBox& box) {
    if (f.is_zero()) throw Error("winding number of the zero polynomial");
    if (sgn(box.re.width()) == 0 || sgn(box.im.width()) == 0)
        throw Error("winding number of a degenerate box");
    const Rational& a = box.re.lo;
    const Rational& b = box.re.hi;
    const Rational& c = box.im.lo;
    const Rational& d = box.im.hi;
    std::vector<GaussianPoint> poly;
    auto [sr, si] = eval_gaussian(f, a, c);
    poly.push_back({sr, si});
    const int depth = 64;
    walk_edge(f, a, c, b, c, poly, depth);
    walk_edge(f, b, c, b, d, poly, depth);
    walk_edge(f, b, d, a, d, poly, depth);
    walk_edge(f, a, d, a, c, poly, depth);
    poly.pop_back(); // closing vertex duplicates the start
    return polygon_winding(poly);
}

namespace {

RatPoly rat_neg_rem(const RatPoly& a, const RatPoly& b) {
    RatPoly r = polyring::rat_rem(a, b);
    for (Rational& c : r) c = -c;
    return r;
}

std::vector<RatPoly> sturm_sequence(const IntPoly& f) {
    std::vector<RatPoly> seq;
    seq.push_back(polyring::to_rat(f));
    RatPoly d = polyring::rat_derivative(seq[0]);
    if (polyring::rat_degree(d) < 0) return seq;
    seq.push_back(d);
    while (true) {
        const RatPoly& s2 = seq[seq.size() - 2];
        const RatPoly& s1 = seq[seq.size() - 1];
        RatPoly r = rat_neg_rem(s2, s1);
        if (polyring::rat_degree(r) < 0) break;
        seq.push_back(std::move(r));
    }
    return seq;
}

int sign_variations(const std::vector<RatPoly>& seq, const Rational& x) {
    int vars = 0, prev = 0;
    for (const RatPoly& s : seq) {
        const int sg = sgn(polyring::rat_eval(s, x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++vars;
        prev = sg;
    }
    return vars;
}

} // namespace

int sturm_count(const IntPoly& f, const Rational& a, const Rational& b) {
    if (f.is_zero()) throw Error("Sturm count of the zero polynomial");
    auto seq = sturm_sequence(f);
    return sign_variations(seq, a) - sign_variations(seq, b);
}

Rational root_modulus_bound(const IntPoly& f) {
    if (f.degree() < 1) return Rational(1);
    Rational m(0);
    for (long i = 0; i < f.degree(); ++i) {
        Rational c = abs(make_rational(f[static_cast<size_t>(i)], f.lc()));
        if (c > m) m = c;
    }
    return m + 1;
}

namespace {

// Real-root isolation of squarefree f in (lo, hi] by Sturm bisection.
void isolate_real_rec(const IntPoly& f, const std::vector<RatPoly>& seq, const Rational& lo,
                      const Rational& hi, int vlo, int vhi, std::vector<Interval>& out) {
    const int count = vlo - vhi;
    if (count == 0) return;
    if (count == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rational mid = (lo + hi) / 2;
    // Nudge off roots so sign variations are clean at the split point.
    while (sgn(f.eval(mid)) == 0) mid = (lo + mid * 3) / 4;
    const int vm = sign_variations(seq, mid);
    isolate_real_rec(f, seq, lo, mid, vlo, vm, out);
    isolate_real_rec(f, seq, mid, hi, vm, vhi, out);
}

std::vector<Interval> isolate_real_roots(const IntPoly& f) {
    std::vector<Interval> out;
    if (f.degree() < 1) return out;
    auto seq = sturm_sequence(f);
    Rational bound = root_modulus_bound(f);
    Rational lo = -bound, hi = bound;
    while (sgn(f.eval(lo)) == 0) lo -= 1; // bound is strict, but stay safe
    while (sgn(f.eval(hi)) == 0) hi += 1;
    isolate_real_rec(f, seq, lo, hi, sign_variations(seq, lo), sign_variations(seq, hi), out);
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

// Tightens a one-root real interval (f has a sign change across it).
Interval refine_real_interval(const IntPoly& f, Interval iv, const Rational& target) {
    int slo = sgn(f.eval(iv.lo));
    if (slo == 0) return Interval::point(iv.lo);
    if (sgn(f.eval(iv.hi)) == 0) return Interval::point(iv.hi);
    while (iv.width() > target) {
        // Interval Newton step when the derivative encloses away from zero.
        const IntPoly fd = f.derivative();
        const Interval dlo = eval_interval(fd, iv);
        bool stepped = false;
        if (!dlo.contains_zero()) {
            const Rational m = iv.mid();
            const Rational fm = f.eval(m);
            Interval newton = Interval::point(m) - Interval::point(fm) / dlo;
            if (newton.intersects(iv)) {
                Interval next = intersect(newton, iv);
                // Keep the sign-change property by snapping endpoints to
                // evaluated points.
                if (next.width() < iv.width() / 2 && sgn(f.eval(next.lo)) * sgn(f.eval(next.hi)) < 0) {
                    iv = next;
                    stepped = true;
                }
            }
        }
        if (!stepped) {
            Rational m = iv.mid();
            int smid = sgn(f.eval(m));
            if (smid == 0) return Interval::point(m);
            if (smid == slo) {
                iv = Interval(m, iv.hi);
            } else {
                iv = Interval(iv.lo, m);
            }
        }
    }
    return iv;
}

ComplexBox upper_to_box(const Interval& re, const Interval& im) { return ComplexBox(re, im); }

// Subdivision isolation of the non-real roots with positive imaginary part.
void isolate_upper_rec(const IntPoly& f, const ComplexBox& box, long want_total,
                       std::vector<ComplexBox>& found, int depth) {
    if (depth > 128) throw Error("complex isolation subdivision too deep");
    int count;
    try {
        count = winding_number(f, box);
    } catch (const Error&) {
        // Root near the boundary: inflate slightly and let the caller's
        // sibling pick it up is not possible here, so re-split with a jitter.
        count = -1;
    }
    if (count == 0) return;
    if (count == 1) {
        found.push_back(box);
        return;
    }
    // count > 1 or boundary trouble: split the longer side, with a jittered
    // split point to dodge roots sitting on the grid line.
    const bool split_re = box.re.width() >= box.im.width();
    Interval side = split_re ? box.re : box.im;
    Rational cut = side.mid();
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rational jitter = side.width() * make_rational(Int(attempt), Int(64 + attempt));
        Rational c = cut + jitter;
        if (!(side.lo < c && c < side.hi)) continue;
        ComplexBox first = split_re ? upper_to_box(Interval(box.re.lo, c), box.im)
                                    : upper_to_box(box.re, Interval(box.im.lo, c));
        ComplexBox second = split_re ? upper_to_box(Interval(c, box.re.hi), box.im)
                                     : upper_to_box(box.re, Interval(c, box.im.hi));
        try {
            std::vector<ComplexBox> sub;
            isolate_upper_rec(f, first, want_total, sub, depth + 1);
            isolate_upper_rec(f, second, want_total, sub, depth + 1);
            for (auto& b : sub) found.push_back(b);
            return;
        } catch (const BoundaryRootNear&) {
            continue; // try the next jittered cut
        }
    }
    throw Error("complex isolation could not find a clean subdivision cut");
}

} // namespace

std::vector<ComplexBox> isolate_roots(const IntPoly& f) {
    if (f.degree() < 1) throw Error("isolate_roots needs degree >= 1");
    IntPoly sf = f;
    if (!polyring::is_squarefree(sf)) {
        auto profile = polyring::squarefree_decomposition(f);
        sf = IntPoly::constant(Int(1));
        for (const auto& fac : profile.factors) sf = sf * fac.poly;
    }
    std::vector<ComplexBox> out;

    if (sf.degree() == 1) {
        Rational r = make_rational(-sf[0], sf[1]);
        out.push_back(ComplexBox::point(r, Rational(0)));
        return out;
    }
    if (sf.degree() == 2) {
        // Closed form; exact real part for the conjugate pair.
        const Rational a(sf[2]), b(sf[1]), c(sf[0]);
        const Rational disc = b * b - a * c * 4;
        if (sgn(disc) >= 0) {
            for (const Interval& iv : isolate_real_roots(sf))
                out.push_back(ComplexBox(refine_real_interval(sf, iv, Rational(1, 1024)),
                                         Interval::point(Rational(0))));
        } else {
            const Rational re = -b / (a * 2);
            Interval imag = sqrt_interval(Interval::point(-disc), 128) * (Rational(1) / abs(a * 2));
            // keep the box non-degenerate in both dimensions so that
            // boundary-based root counting applies (sqrt can be exact)
            const Rational delta = imag.lo / 4;
            Interval re_iv(re - delta, re + delta);
            Interval im_iv(imag.lo - delta, imag.hi + delta);
            out.push_back(ComplexBox(re_iv, im_iv));
            out.push_back(ComplexBox(re_iv, -im_iv));
        }
        std::sort(out.begin(), out.end(), [](const ComplexBox& x, const ComplexBox& y) {
            if (x.re.lo != y.re.lo) return x.re.lo < y.re.lo;
            return x.im.lo > y.im.lo;
        });
        return out;
    }

    std::vector<Interval> rroots = isolate_real_roots(sf);
    for (const Interval& iv : rroots)
        out.push_back(ComplexBox(refine_real_interval(sf, iv, iv.width() / 1024),
                                 Interval::point(Rational(0))));
    const long n_nonreal = sf.degree() - static_cast<long>(rroots.size());
    if (n_nonreal == 0) return out;
    if (n_nonreal % 2 != 0) throw Error("real root isolation inconsistent with degree");
    const long pairs = n_nonreal / 2;

    const Rational bound = root_modulus_bound(sf);
    std::vector<ComplexBox> upper;
    for (int shrink = 6; shrink <= 40; shrink += 2) {
        upper.clear();
        const Rational floor_im = bound / pow_int(Int(2), static_cast<unsigned long>(shrink));
        ComplexBox region(Interval(-bound, bound), Interval(floor_im, bound));
        try {
            isolate_upper_rec(sf, region, pairs, upper, 0);
        } catch (const Error&) {
            continue; // jitter the floor by shrinking again
        }
        if (static_cast<long>(upper.size()) == pairs) break;
    }
    if (static_cast<long>(upper.size()) != pairs)
        throw Error("failed to isolate all non-real roots");
    std::sort(upper.begin(), upper.end(), [](const ComplexBox& x, const ComplexBox& y) {
        return x.re.lo + x.re.hi < y.re.lo + y.re.hi;
    });
    for (const ComplexBox& b : upper) {
        out.push_back(b);
        out.push_back(ComplexBox(b.re, -b.im));
    }
    return out;
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
    AlgebraicNumber x;
    x.minpoly = IntPoly::linear_root(r);
    x.isolator = ComplexBox::point(r, Rational(0));
    x.irreducible_certified = true;
    x.irreducibility_reason = "degree 1";
    return x;
}

void validate(const AlgebraicNumber& x) {
    if (x.minpoly.degree() < 1) throw Error("algebraic number with constant minimal polynomial");
    if (!x.minpoly.is_primitive() || sgn(x.minpoly.lc()) < 0)
        throw Error("minimal polynomial must be primitive with positive leading coefficient");
    if (!polyring::is_squarefree(x.minpoly))
        throw Error("minimal polynomial must be squarefree");
    if (x.is_rational()) {
        Rational r = make_rational(-x.minpoly[0], x.minpoly[1]);
        if (!x.isolator.re.contains(r) || !x.isolator.im.contains(Rational(0)))
            throw Error("rational isolator does not contain the root");
        return;
    }
    int count;
    if (x.isolator.is_real_line()) {
        if (x.isolator.re.is_point()) {
            count = sgn(x.minpoly.eval(x.isolator.re.lo)) == 0 ? 1 : 0;
        } else {
            count = sturm_count(x.minpoly, x.isolator.re.lo, x.isolator.re.hi);
            // (lo, hi] counting; an exact hit on lo is a root outside
            if (sgn(x.minpoly.eval(x.isolator.re.lo)) == 0)
                throw Error("isolator endpoint is a root; shrink or shift the interval");
        }
    } else if (x.isolator.re.is_point() && x.isolator.im.is_point()) {
        auto [er, ei] = eval_gaussian(x.minpoly, x.isolator.re.lo, x.isolator.im.lo);
        count = (sgn(er) == 0 && sgn(ei) == 0) ? 1 : 0;
    } else if (x.isolator.re.is_point() || x.isolator.im.is_point()) {
        throw Error("half-degenerate isolator box");
    } else {
        count = winding_number(x.minpoly, x.isolator);
    }
    if (count != 1)
        throw Error("isolator contains " + std::to_string(count) + " roots, expected exactly 1");
}

namespace {

ComplexBox refine_complex_box(const IntPoly& f, ComplexBox box, const Rational& target) {
    const IntPoly fd = f.derivative();
    while (box.max_side() > target) {
        bool stepped = false;
        ComplexBox dv = eval_box(fd, box);
        if (!abs_squared(dv).contains_zero()) {
            const Rational mr = box.re.mid(), mi = box.im.mid();
            auto [fr, fi] = eval_gaussian(f, mr, mi);
            if (sgn(fr) == 0 && sgn(fi) == 0) return ComplexBox::point(mr, mi); // exact root
            ComplexBox fmid = ComplexBox::point(fr, fi);
            ComplexBox newton = ComplexBox::point(mr, mi) - fmid / dv;
            if (newton.intersects(box)) {
                ComplexBox next = intersect(newton, box);
                if (sgn(next.re.width()) > 0 && sgn(next.im.width()) > 0 &&
                    next.max_side() < box.max_side() * Rational(3, 4)) {
                    box = next;
                    stepped = true;
                }
            } else {
                throw Error("refinement lost the root (corrupted isolator)");
            }
        }
        if (!stepped) {
            // Bisect the longer side; keep the half with winding count 1.
            const bool split_re = box.re.width() >= box.im.width();
            bool placed = false;
            for (int attempt = 0; attempt < 8 && !placed; ++attempt) {
                Interval side = split_re ? box.re : box.im;
                Rational c = side.mid() + side.width() * make_rational(Int(attempt), Int(64 + attempt));
                if (!(side.lo < c && c < side.hi)) continue;
                ComplexBox first = split_re ? ComplexBox(Interval(side.lo, c), box.im)
                                            : ComplexBox(box.re, Interval(side.lo, c));
                ComplexBox second = split_re ? ComplexBox(Interval(c, side.hi), box.im)
                                             : ComplexBox(box.re, Interval(c, side.hi));
                try {
                    if (winding_number(f, first) == 1) {
                        box = first;
                        placed = true;
                    } else if (winding_number(f, second) == 1) {
                        box = second;
                        placed = true;
                    } else {
                        throw Error("refinement lost the root (corrupted isolator)");
                    }
                } catch (const BoundaryRootNear&) {
                    continue;
                }
            }
            if (!placed) throw Error("complex refinement failed to find a clean bisection");
        }
    }
    return box;
}

} // namespace

AlgebraicNumber refine_isolator(const AlgebraicNumber& x, const Rational& target_width) {
    if (sgn(target_width) <= 0) throw Error("target width must be positive");
    AlgebraicNumber out = x;
    if (x.is_rational()) {
        Rational r = make_rational(-x.minpoly[0], x.minpoly[1]);
        out.isolator = ComplexBox::point(r, Rational(0));
        return out;
    }
    validate(x);
    if (x.isolator.is_real_line()) {
        Interval iv(x.isolator.re);
        if (sgn(x.minpoly.eval(iv.lo)) == 0) {
            out.isolator = ComplexBox(Interval::point(iv.lo), Interval::point(Rational(0)));
            return out;
        }
        if (sgn(x.minpoly.eval(iv.hi)) == 0) {
            out.isolator = ComplexBox(Interval::point(iv.hi), Interval::point(Rational(0)));
            return out;
        }
        if (sgn(x.minpoly.eval(iv.lo)) * sgn(x.minpoly.eval(iv.hi)) > 0)
            throw Error("real isolator without sign change; cannot refine");
        out.isolator = ComplexBox(refine_real_interval(x.minpoly, iv, target_width),
                                  Interval::point(Rational(0)));
        return out;
    }
    out.isolator = refine_complex_box(x.minpoly, x.isolator, target_width);
    return out;
}

namespace {

// Rigorous positive lower bound on the distance between distinct roots of a
// squarefree integer polynomial (Mahler's separation bound with |disc| >= 1):
// sep(f)^2 > 3 * d^{-(d+2)} * ||f||_2^{-2(d-1)}.
Rational root_separation_lower_bound(const IntPoly& f) {
    const long d = f.degree();
    if (d < 2) return Rational(1);
    Int norm2(0);
    for (const Int& c : f.coeffs()) norm2 += c * c;
    Rational s2 = Rational(3) / (pow_rational(Rational(d), d + 2) *
                                 pow_rational(Rational(norm2), d - 1));
    Interval s = sqrt_interval(Interval::point(s2), 64);
    return s.lo;
}

} // namespace

bool same_algebraic_number(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (!(a.minpoly == b.minpoly)) return false;
    if (!a.isolator.intersects(b.isolator)) return false;
    if (a.is_real() != b.is_real()) return false;
    // Same squarefree polynomial: refine both boxes below a quarter of the
    // root separation bound; the roots are equal iff the boxes still touch.
    const Rational target = root_separation_lower_bound(a.minpoly) / 4;
    AlgebraicNumber x = refine_isolator(a, target);
    AlgebraicNumber y = refine_isolator(b, target);
    return x.isolator.intersects(y.isolator);
}

AlgebraicNumber translate(const AlgebraicNumber& x, const Rational& r) {
    AlgebraicNumber out;
    out.minpoly = polyring::translate_roots(x.minpoly, r);
    out.isolator = shift(x.isolator, r);
    out.irreducible_certified = x.irreducible_certified;
    out.irreducibility_reason =
        x.irreducible_certified ? "translate of a certified-irreducible number" : "";
    return out;
}

} // namespace umlab::exactnum
