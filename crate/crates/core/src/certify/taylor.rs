//! Centered forms: second-order Taylor form in one variable, mean-value form
//! with monotonicity reduction in two.

use super::interval::Interval;
use super::jet::Jet;
use super::real::Real;

/// `f(X) ⊆ f(c) + f'(c)(X−c) + ½f''(X)(X−c)²`, intersected with the natural
/// enclosure `f(X)`.
pub fn taylor_form_1d(
    f: impl Fn(&Interval) -> Interval,
    fj: impl Fn(&Jet<Interval>) -> Jet<Interval>,
    x: Interval,
) -> Interval {
    let naive = f(&x);
    if x.width() == 0.0 || !x.is_finite() {
        return naive;
    }
    let c = Interval::point(x.mid());
    let at_c = fj(&Jet::variable(c, 1));
    let over = fj(&Jet::variable(x, 2));
    let d = x - c;
    let tf = at_c.coeff(0) + at_c.coeff(1) * d + over.coeff(2) * d.sqr();
    if tf.is_finite() {
        naive.intersect(&tf)
    } else {
        naive
    }
}

pub type Jet2 = Jet<Jet<Interval>>;

/// Seed `(x, y)` as independent first-order variables.
pub fn seed2(x: Interval, y: Interval) -> (Jet2, Jet2) {
    (Jet::variable(Jet::lift(x), 1), Jet::lift(Jet::variable(y, 1)))
}

/// Range enclosure over the box `x × y`.
///
/// Partial derivatives are enclosed over the box with nested jets. A
/// coordinate in which `f` is monotone is collapsed to the relevant face for
/// each endpoint of the range; otherwise the mean-value form is intersected
/// with the natural enclosure.
pub fn mean_value_2d(
    f: &impl Fn(&Interval, &Interval) -> Interval,
    fj: &impl Fn(&Jet2, &Jet2) -> Jet2,
    x: Interval,
    y: Interval,
) -> Interval {
    let naive = f(&x, &y);
    if x.width() == 0.0 && y.width() == 0.0 {
        return naive;
    }
    let (jx, jy) = seed2(x, y);
    let j = fj(&jx, &jy);
    let fx = j.coeff(1).coeff(0);
    let fy = j.coeff(0).coeff(1);
    let mono = |g: Interval, w: f64| w > 0.0 && (g.lo >= 0.0 || g.hi <= 0.0) && g.is_finite();
    if mono(fx, x.width()) || mono(fy, y.width()) {
        // faces where f is smallest / largest
        let pick = |g: Interval, iv: Interval, w: f64, low: bool| -> Interval {
            if !mono(g, w) {
                return iv;
            }
            let increasing = g.lo >= 0.0;
            if increasing == low {
                Interval::point(iv.lo)
            } else {
                Interval::point(iv.hi)
            }
        };
        let lo_box = (pick(fx, x, x.width(), true), pick(fy, y, y.width(), true));
        let hi_box = (pick(fx, x, x.width(), false), pick(fy, y, y.width(), false));
        let lo = mean_value_2d(f, fj, lo_box.0, lo_box.1).lo;
        let hi = mean_value_2d(f, fj, hi_box.0, hi_box.1).hi;
        return naive.intersect(&Interval { lo, hi: hi.max(lo) });
    }
    let (cx, cy) = (Interval::point(x.mid()), Interval::point(y.mid()));
    let fc = f(&cx, &cy);
    let mvf = fc + fx * (x - cx) + fy * (y - cy);
    if mvf.is_finite() {
        naive.intersect(&mvf)
    } else {
        naive
    }
}
