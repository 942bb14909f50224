//! Fujishige-Wolfe minimum-norm-point minimisation in exact rational
//! arithmetic.
//!
//! For submodular `F` with `F(∅) = 0` the minimum-norm point `x*` of the
//! base polytope satisfies: `{x* < 0}` is the smallest and `{x* <= 0}` the
//! largest minimiser. Exactness makes Wolfe's optimality test
//! `<x, x> <= <x, q>` decisive, so no tolerances appear anywhere.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::subset::SubsetMask;

use super::{extend_maximal, ScaledCunninghamFn};

type Point = Vec<BigRational>;

struct Polytope<'f, 'a> {
    f: &'f ScaledCunninghamFn<'a>,
    elements: Vec<usize>,
}

impl Polytope<'_, '_> {
    fn dim(&self) -> usize {
        self.elements.len()
    }

    /// The vertex of `B(F)` minimising `<w, q>`: Edmonds' greedy vertex for
    /// the order sorting `w` ascending, ties by element index.
    fn greedy_vertex(&self, w: &[BigRational]) -> Point {
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by(|&a, &b| w[a].cmp(&w[b]).then(a.cmp(&b)));
        let mut q = vec![BigRational::zero(); self.dim()];
        let mut prefix = SubsetMask::EMPTY;
        let mut prev = 0i64;
        for idx in order {
            prefix = prefix.with(self.elements[idx]);
            let v = self.f.eval_unchecked(prefix);
            q[idx] = BigRational::from_integer((v - prev).into());
            prev = v;
        }
        q
    }

    fn mask_where(&self, x: &[BigRational], keep: impl Fn(&BigRational) -> bool) -> SubsetMask {
        self.elements
            .iter()
            .zip(x)
            .filter(|(_, xi)| keep(xi))
            .map(|(&e, _)| e)
            .collect()
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combine(points: &[Point], weights: &[BigRational]) -> Point {
    let dim = points[0].len();
    let mut x = vec![BigRational::zero(); dim];
    for (p, w) in points.iter().zip(weights) {
        for (xi, pi) in x.iter_mut().zip(p) {
            *xi += w * pi;
        }
    }
    x
}

/// Affine weights of the point of minimum norm in the affine hull of
/// `points`: solves `[G 1; 1^T 0] [a; mu] = [0; 1]` with `G` the Gram matrix.
fn affine_minimizer(points: &[Point]) -> Result<Vec<BigRational>> {
    let m = points.len();
    let mut sys: Vec<Vec<BigRational>> = (0..=m)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..m)
                .map(|j| {
                    if i < m {
                        dot(&points[i], &points[j])
                    } else {
                        BigRational::one()
                    }
                })
                .collect();
            row.push(if i < m {
                BigRational::one()
            } else {
                BigRational::zero()
            });
            row.push(if i < m {
                BigRational::zero()
            } else {
                BigRational::one()
            });
            row
        })
        .collect();
    let size = m + 1;
    for c in 0..size {
        let p = (c..size)
            .find(|&r| !sys[r][c].is_zero())
            .ok_or_else(|| Error::CertificationFailed("affinely dependent corral".into()))?;
        sys.swap(c, p);
        let inv = sys[c][c].recip();
        for v in sys[c].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = sys[c].clone();
        for (r, row) in sys.iter_mut().enumerate() {
            if r != c && !row[c].is_zero() {
                let factor = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &factor * pv;
                }
            }
        }
    }
    Ok(sys
        .into_iter()
        .take(m)
        .map(|row| row[size].clone())
        .collect())
}

/// Minimum-norm point of `B(F)` together with its convex decomposition.
fn min_norm_point(poly: &Polytope<'_, '_>) -> Result<(Point, Vec<Point>, Vec<BigRational>)> {
    let zero_w = vec![BigRational::zero(); poly.dim()];
    let mut corral = vec![poly.greedy_vertex(&zero_w)];
    let mut lambda = vec![BigRational::one()];
    let mut x = corral[0].clone();
    loop {
        let q = poly.greedy_vertex(&x);
        if dot(&x, &x) <= dot(&x, &q) {
            return Ok((x, corral, lambda));
        }
        if corral.contains(&q) {
            return Err(Error::CertificationFailed(
                "improving vertex already in corral".into(),
            ));
        }
        corral.push(q);
        lambda.push(BigRational::zero());
        loop {
            let alpha = affine_minimizer(&corral)?;
            if alpha.iter().all(Signed::is_positive) {
                x = combine(&corral, &alpha);
                lambda = alpha;
                break;
            }
            // step from lambda towards alpha until a weight hits zero
            let theta = lambda
                .iter()
                .zip(&alpha)
                .filter(|(_, a)| !a.is_positive())
                .map(|(l, a)| l / (l - a))
                .min()
                .expect("some affine weight is non-positive");
            let one_minus = BigRational::one() - &theta;
            lambda = lambda
                .iter()
                .zip(&alpha)
                .map(|(l, a)| &theta * a + &one_minus * l)
                .collect();
            let keep: Vec<bool> = lambda.iter().map(Signed::is_positive).collect();
            corral = corral
                .into_iter()
                .zip(&keep)
                .filter_map(|(p, &k)| k.then_some(p))
                .collect();
            lambda.retain(Signed::is_positive);
        }
    }
}

/// Largest minimiser of `F` via the exact minimum-norm point.
///
/// The result is certified: the minimum-norm point `x` lies in `B(F)`, so
/// `x^-(B) <= x(I) <= F(I)` for every `I`, and `F(J) = x^-(B)` proves `J`
/// minimal. Maximality is then enforced by single-element extension.
pub fn minimize_mnp(f: &ScaledCunninghamFn<'_>) -> Result<SubsetMask> {
    let elements: Vec<usize> = f.base().iter().collect();
    if elements.is_empty() {
        return Ok(SubsetMask::EMPTY);
    }
    if f.eval_unchecked(SubsetMask::EMPTY) != 0 {
        return Err(Error::CertificationFailed("F(∅) != 0".into()));
    }
    let poly = Polytope { f, elements };
    let (x, _corral, _lambda) = min_norm_point(&poly)?;
    let lower_bound: BigRational = x.iter().filter(|v| v.is_negative()).sum();
    let candidate = poly.mask_where(&x, |v| !v.is_positive());
    let value = BigRational::from_integer(f.eval_unchecked(candidate).into());
    if value != lower_bound {
        return Err(Error::CertificationFailed(format!(
            "F({candidate:?}) = {value} differs from the dual bound {lower_bound}"
        )));
    }
    let j = extend_maximal(f, candidate);
    if f.eval_unchecked(j) != f.eval_unchecked(candidate) {
        return Err(Error::CertificationFailed("extension changed F".into()));
    }
    Ok(j)
}
