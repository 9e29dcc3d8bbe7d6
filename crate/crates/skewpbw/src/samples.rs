//! Ready-made presentations used in documentation, tests and the shipped
//! sample files.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::funalg::{AlgebraElement, Permutation};
use crate::pbw::Presentation;

fn rat(pair: (i64, i64)) -> BigRational {
    BigRational::new(pair.0.into(), pair.1.into())
}

/// Two generators over two points: `tau_1 = id`, `tau_2` the swap, and
/// `x_2 x_1 = (c_at_0, c_at_1) x_1 x_2`. Each constant is given as a
/// `(numerator, denominator)` pair.
pub fn two_point_swap_plane(c_at_0: (i64, i64), c_at_1: (i64, i64)) -> Presentation {
    let taus = vec![Permutation::identity(2), Permutation::from_image(vec![1, 0]).expect("swap")];
    let c12 = AlgebraElement::new(vec![rat(c_at_0), rat(c_at_1)]);
    let mut c = BTreeMap::new();
    c.insert((0usize, 1usize), c12);
    Presentation::quasi_commutative(2, taus, c).expect("valid presentation")
}

/// One generator over two points with the swap automorphism and the inner
/// derivation with parameter `(1, 1)`: `x r = sigma(r) x + (sigma(r) - r)`.
pub fn ore_swap_derivation() -> Presentation {
    let tau = Permutation::from_image(vec![1, 0]).expect("swap");
    let d = AlgebraElement::from_integers(&[1, 1]);
    Presentation::new(2, vec![tau], Some(vec![d]), BTreeMap::new(), BTreeMap::new())
        .expect("valid presentation")
}

/// One generator over five points with a full cycle and no derivation;
/// every nonzero power of the cycle is fixed-point-free.
pub fn five_cycle_ore() -> Presentation {
    let tau = Permutation::from_image(vec![1, 2, 3, 4, 0]).expect("cycle");
    Presentation::quasi_commutative(5, vec![tau], BTreeMap::new()).expect("valid presentation")
}

/// A fully commutative presentation: all automorphisms trivial, all
/// constants one.
pub fn commutative(omega_size: usize, n: usize) -> Presentation {
    let taus = vec![Permutation::identity(omega_size); n];
    Presentation::quasi_commutative(omega_size, taus, BTreeMap::new()).expect("valid presentation")
}

/// Two generators over three points: `tau_1 = id`, `tau_2` swaps points 0
/// and 1 and fixes point 2. With the single-jump partition this is the
/// presentation whose pieces are `(-inf,t1)`, `(t1,inf)` and `{t1}`.
pub fn three_piece_swap_plane() -> Presentation {
    let taus = vec![
        Permutation::identity(3),
        Permutation::from_image(vec![1, 0, 2]).expect("swap of open pieces"),
    ];
    let mut c = BTreeMap::new();
    c.insert((0usize, 1usize), AlgebraElement::from_integers(&[1, 2, 1]));
    Presentation::quasi_commutative(3, taus, c).expect("valid presentation")
}
