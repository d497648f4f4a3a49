//! Intersection poset `L(A)`, its Möbius function, and the characteristic
//! polynomial `chi_A(t) = sum over flats x of mu(x) t^dim(x)`.

use crate::arrangement::{Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::exactmath::{dot, solve_affine, AffineSolution, Scalar, Vector};
use crate::polynomial::Polynomial;
use num::{BigInt, Integer, One, Signed, Zero};
use std::collections::HashMap;

/// A nonempty intersection of hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub point: Vector,
    pub directions: Vec<Vector>,
    /// Every hyperplane of the arrangement containing this flat, ascending.
    /// This set determines the flat.
    pub hyperplanes: Vec<usize>,
    pub mobius: i64,
}

impl Flat {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn codim(&self) -> usize {
        self.point.len() - self.dim()
    }

    pub fn contains_point(&self, x: &[Scalar]) -> bool {
        let diff: Vector = x.iter().zip(&self.point).map(|(a, b)| a - b).collect();
        let mut rows = self.directions.clone();
        let before = crate::exactmath::rank_of(x.len(), &rows);
        rows.push(diff);
        crate::exactmath::rank_of(x.len(), &rows) == before
    }

    fn same_subspace(&self, other: &Flat) -> bool {
        self.dim() == other.dim()
            && self.contains_point(&other.point)
            && other.directions.iter().all(|d| {
                let moved: Vector = other.point.iter().zip(d).map(|(p, x)| p + x).collect();
                self.contains_point(&moved)
            })
    }

    pub fn as_solution(&self) -> AffineSolution {
        AffineSolution::Affine {
            point: self.point.clone(),
            directions: self.directions.clone(),
        }
    }
}

/// Indices of the hyperplanes containing the flat `point + span(directions)`.
fn containing(hyperplanes: &[Hyperplane], point: &[Scalar], directions: &[Vector]) -> Vec<usize> {
    hyperplanes
        .iter()
        .enumerate()
        .filter(|(_, h)| {
            h.contains(point) && directions.iter().all(|d| dot(h.normal(), d).is_zero())
        })
        .map(|(i, _)| i)
        .collect()
}

/// `a . x = b` with integer coefficients.
struct IntEquation {
    a: Vec<BigInt>,
    b: BigInt,
}

fn int_dot(a: &[BigInt], x: &[BigInt]) -> BigInt {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// The flat `v / den + span(dirs)` in integer coordinates, used while
/// building the poset to avoid rational normalization.
#[derive(Clone)]
struct IntFlat {
    v: Vec<BigInt>,
    den: BigInt,
    dirs: Vec<Vec<BigInt>>,
}

impl IntFlat {
    fn ambient(dim: usize) -> Self {
        let dirs = (0..dim)
            .map(|i| {
                let mut e = vec![BigInt::zero(); dim];
                e[i] = BigInt::one();
                e
            })
            .collect();
        Self {
            v: vec![BigInt::zero(); dim],
            den: BigInt::one(),
            dirs,
        }
    }

    fn lies_in(&self, eq: &IntEquation) -> bool {
        int_dot(&eq.a, &self.v) == &eq.b * &self.den
            && self.dirs.iter().all(|d| int_dot(&eq.a, d).is_zero())
    }

    /// Intersection with a hyperplane not containing the flat; `None` when
    /// parallel.
    fn meet(&self, eq: &IntEquation) -> Option<Self> {
        let slopes: Vec<BigInt> = self.dirs.iter().map(|d| int_dot(&eq.a, d)).collect();
        let j = slopes.iter().position(|c| !c.is_zero())?;
        let cj = &slopes[j];
        let gap = &eq.b * &self.den - int_dot(&eq.a, &self.v);
        let dj = &self.dirs[j];
        let mut v: Vec<BigInt> = self.v.iter().zip(dj).map(|(x, d)| x * cj + d * &gap).collect();
        let mut den = &self.den * cj;
        if den.is_negative() {
            den = -den;
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        let g = v.iter().fold(den.clone(), |g, x| g.gcd(x));
        if !g.is_one() {
            v.iter_mut().for_each(|x| *x /= &g);
            den /= &g;
        }
        let dirs = self
            .dirs
            .iter()
            .zip(&slopes)
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, (d, c))| {
                let mut w: Vec<BigInt> = d.iter().zip(dj).map(|(x, y)| x * cj - y * c).collect();
                make_primitive(&mut w);
                w
            })
            .collect();
        Some(Self { v, den, dirs })
    }

    fn to_flat(&self, hyperplanes: Vec<usize>) -> Flat {
        let den = Scalar::from_integer(self.den.clone());
        Flat {
            point: self.v.iter().map(|x| Scalar::from_integer(x.clone()) / &den).collect(),
            directions: self
                .dirs
                .iter()
                .map(|d| d.iter().map(|x| Scalar::from_integer(x.clone())).collect())
                .collect(),
            hyperplanes,
            mobius: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
    flats: Vec<Flat>,
    index: HashMap<Vec<usize>, usize>,
}

impl IntersectionPoset {
    /// Builds `L(A)` by closing `{R^n}` under intersection with each
    /// hyperplane, then assigns Möbius values by increasing codimension.
    pub fn build(arr: &Arrangement) -> Self {
        let dim = arr.dim();
        let hyperplanes = arr.hyperplanes().to_vec();
        let equations: Vec<IntEquation> = hyperplanes
            .iter()
            .map(|h| {
                let scale = Scalar::from_integer(h.offset().denom().clone());
                IntEquation {
                    a: h.normal().iter().map(|x| (x * &scale).to_integer()).collect(),
                    b: (h.offset() * &scale).to_integer(),
                }
            })
            .collect();

        let mut work = vec![IntFlat::ambient(dim)];
        let mut flats = vec![work[0].to_flat(Vec::new())];
        flats[0].mobius = 1;
        let mut index = HashMap::from([(Vec::new(), 0)]);

        let mut next = 0;
        while next < flats.len() {
            let parent = work[next].clone();
            let mut in_parent = vec![false; equations.len()];
            for &i in &flats[next].hyperplanes {
                in_parent[i] = true;
            }
            let mut covered = in_parent.clone();
            next += 1;
            if parent.dirs.is_empty() {
                continue;
            }
            for h in 0..equations.len() {
                if covered[h] {
                    continue;
                }
                let Some(child) = parent.meet(&equations[h]) else {
                    continue;
                };
                let inside: Vec<usize> = (0..equations.len())
                    .filter(|&i| in_parent[i] || i == h || child.lies_in(&equations[i]))
                    .collect();
                // every hyperplane through the child yields the same child
                for &i in &inside {
                    covered[i] = true;
                }
                if index.contains_key(&inside) {
                    continue;
                }
                index.insert(inside.clone(), flats.len());
                flats.push(child.to_flat(inside));
                work.push(child);
            }
        }

        assign_mobius(&mut flats, arr.len());
        Self {
            dim,
            hyperplanes,
            flats,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// All flats; index 0 is the ambient space, and flats appear in
    /// nondecreasing codimension.
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Locates the flat cut out by a system of equations.
    pub fn find(&self, equations: &[(Vector, Scalar)]) -> Option<&Flat> {
        let AffineSolution::Affine { point, directions } = solve_affine(self.dim, equations) else {
            return None;
        };
        let inside = containing(&self.hyperplanes, &point, &directions);
        let flat = &self.flats[*self.index.get(&inside)?];
        // the flat cut out by `inside` contains the solution set; equal
        // dimension means they coincide
        (flat.dim() == directions.len()).then_some(flat)
    }

    /// `mu(0, x)` for a flat of this poset.
    pub fn mobius(&self, flat: &Flat) -> Result<i64> {
        match self.index.get(&flat.hyperplanes) {
            Some(&i) if self.flats[i].same_subspace(flat) => Ok(self.flats[i].mobius),
            _ => Err(Error::UnknownFlat),
        }
    }

    /// `y <= x` in reverse-inclusion order.
    pub fn le(&self, y: &Flat, x: &Flat) -> bool {
        is_subset(&y.hyperplanes, &x.hyperplanes)
    }

    pub fn char_poly(&self) -> Polynomial {
        let mut coeffs = vec![Scalar::zero(); self.dim + 1];
        for f in &self.flats {
            coeffs[f.dim()] += Scalar::from_integer(f.mobius.into());
        }
        Polynomial::new(coeffs)
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|s| it.by_ref().any(|b| b == s))
}

type Bits = Vec<u64>;

fn to_bits(indices: &[usize], m: usize) -> Bits {
    let mut b = vec![0u64; m.div_ceil(64).max(1)];
    for &i in indices {
        b[i / 64] |= 1 << (i % 64);
    }
    b
}

fn bits_proper_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0) && a != b
}

/// `mu(x) = -sum over y < x of mu(y)`, processed by codimension so every
/// `y < x` is final before `x`.
fn assign_mobius(flats: &mut [Flat], m: usize) {
    let bits: Vec<Bits> = flats.iter().map(|f| to_bits(&f.hyperplanes, m)).collect();
    let mut order: Vec<usize> = (0..flats.len()).collect();
    order.sort_by_key(|&i| flats[i].codim());
    let mut done: Vec<usize> = Vec::with_capacity(flats.len());
    for &x in &order {
        if flats[x].codim() == 0 {
            flats[x].mobius = 1;
        } else {
            let sum: i64 = done
                .iter()
                .filter(|&&y| bits_proper_subset(&bits[y], &bits[x]))
                .map(|&y| flats[y].mobius)
                .sum();
            flats[x].mobius = -sum;
        }
        done.push(x);
    }
}

pub fn build_poset(arr: &Arrangement) -> IntersectionPoset {
    IntersectionPoset::build(arr)
}

/// Characteristic polynomial via the Möbius function of `L(A)`.
pub fn char_poly(arr: &Arrangement) -> Polynomial {
    IntersectionPoset::build(arr).char_poly()
}
