//! The specific row generators ("permutators") used by the constructions.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Signed displacement of position `i` in the even-order generator:
/// `+1` at the first position, `-1` at the last, and `2·(-1)^i` between.
pub fn rho(i: usize, n: usize) -> Result<i64> {
    check_even(n)?;
    if !(1..=n).contains(&i) {
        return Err(Error::Domain(format!("position {i} out of range 1..={n}")));
    }
    Ok(if i == 1 {
        1
    } else if i == n {
        -1
    } else if i.is_multiple_of(2) {
        2
    } else {
        -2
    })
}

fn check_even(n: usize) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "order {n} must be even and at least 2"
        )));
    }
    Ok(())
}

/// The fundamental generator of even order `n`: `i -> i + rho(i)`.
///
/// It is a single `n`-cycle whose `n/2`-th power is the secondary identity.
pub fn beta_pi(n: usize) -> Result<Permutation> {
    check_even(n)?;
    let images = (1..=n)
        .map(|i| {
            let j = i as i64 + rho(i, n)?;
            Ok(j as usize)
        })
        .collect::<Result<Vec<_>>>()?;
    let p = Permutation::from_one_based(&images)
        .map_err(|e| Error::Construction(format!("displacement map is not a bijection: {e}")))?;
    assert!(p.is_full_cycle(), "beta_pi({n}) must be a single cycle");
    Ok(p)
}

/// The fixed order-6 generator of the first-order degenerate structure.
/// It has no closed form.
pub fn alpha_pi6() -> Permutation {
    Permutation::from_one_based(&[5, 3, 1, 6, 4, 2]).expect("valid constant")
}

/// Drops the last row and column of the matrix view of an even-order
/// permutation and restores a bijection by placing a `1` at the
/// intersection of the row and the column left empty.
pub fn reduce_to_odd(p: &Permutation) -> Result<Permutation> {
    let big = p.order();
    if !big.is_multiple_of(2) {
        return Err(Error::Reduction(format!("order {big} is not even")));
    }
    if big < 2 {
        return Err(Error::Reduction("order must be at least 2".into()));
    }
    let last = big - 1;
    let small = big - 1;
    let map = p.as_zero_based();

    let emptied_rows: Vec<usize> = (0..small).filter(|&i| map[i] == last).collect();
    let mut occupied = vec![false; small];
    for &j in &map[..small] {
        if j < small {
            occupied[j] = true;
        }
    }
    let emptied_cols: Vec<usize> = (0..small).filter(|&j| !occupied[j]).collect();

    let mut reduced: Vec<usize> = map[..small].to_vec();
    match (emptied_rows.as_slice(), emptied_cols.as_slice()) {
        ([], []) => {}
        ([r], [c]) => reduced[*r] = *c,
        _ => {
            return Err(Error::Reduction(format!(
                "expected one emptied row and column, found rows {:?} and columns {:?}",
                one_based(&emptied_rows),
                one_based(&emptied_cols)
            )))
        }
    }
    Permutation::from_one_based(&one_based(&reduced))
        .map_err(|e| Error::Reduction(format!("result is not a bijection: {e}")))
}

fn one_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{anti_identity, order_of, power};

    #[test]
    fn rho_values() {
        assert_eq!(rho(1, 4).unwrap(), 1);
        assert_eq!(rho(2, 4).unwrap(), 2);
        assert_eq!(rho(3, 4).unwrap(), -2);
        assert_eq!(rho(4, 4).unwrap(), -1);
        assert_eq!(rho(1, 2).unwrap(), 1);
        assert_eq!(rho(2, 2).unwrap(), -1);
        assert!(rho(1, 5).is_err());
        assert!(rho(0, 4).is_err());
        assert!(rho(5, 4).is_err());
    }

    #[test]
    fn rho_is_antisymmetric_under_mirror() {
        for n in (2..=30).step_by(2) {
            for i in 1..=n {
                assert_eq!(rho(i, n).unwrap(), -rho(n + 1 - i, n).unwrap());
            }
        }
    }

    #[test]
    fn beta_small_orders() {
        assert_eq!(beta_pi(4).unwrap().to_one_based(), vec![2, 4, 1, 3]);
        assert_eq!(
            beta_pi(4).unwrap().to_matrix(),
            vec![
                vec![0, 1, 0, 0],
                vec![0, 0, 0, 1],
                vec![1, 0, 0, 0],
                vec![0, 0, 1, 0],
            ]
        );
        assert_eq!(beta_pi(2).unwrap().to_one_based(), vec![2, 1]);
        assert!(beta_pi(0).is_err());
        assert!(beta_pi(7).is_err());
    }

    #[test]
    fn beta_is_full_cycle_with_half_power_anti_identity() {
        for n in (2..=60).step_by(2) {
            let b = beta_pi(n).unwrap();
            assert_eq!(b.cycles().len(), 1);
            assert_eq!(order_of(&b), n as u64);
            assert_eq!(power(&b, n as u64 / 2), anti_identity(n).unwrap());
        }
    }

    #[test]
    fn alpha_constant() {
        let a = alpha_pi6();
        assert_eq!(a.to_one_based(), vec![5, 3, 1, 6, 4, 2]);
        assert_eq!(
            a.to_matrix(),
            vec![
                vec![0, 0, 0, 0, 1, 0],
                vec![0, 0, 1, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, 1, 0, 0, 0, 0],
            ]
        );
    }

    #[test]
    fn odd_reduction_of_beta10() {
        let r = reduce_to_odd(&beta_pi(10).unwrap()).unwrap();
        assert_eq!(r.to_one_based(), vec![2, 4, 1, 6, 3, 8, 5, 9, 7]);
        // the restored entry sits at row 8, column 9
        assert_eq!(r.image(8), 9);
    }

    #[test]
    fn odd_reduction_edge_cases() {
        assert!(reduce_to_odd(&beta_pi(2).unwrap()).unwrap().is_identity());
        // last point fixed: nothing to restore
        let p = Permutation::from_one_based(&[2, 1, 4, 3, 6, 5, 7, 8]).unwrap();
        assert_eq!(
            reduce_to_odd(&p).unwrap().to_one_based(),
            vec![2, 1, 4, 3, 6, 5, 7]
        );
        let p = Permutation::from_one_based(&[2, 1, 4, 3]).unwrap();
        assert_eq!(reduce_to_odd(&p).unwrap().to_one_based(), vec![2, 1, 3]);
        let odd = Permutation::from_one_based(&[1, 2, 3]).unwrap();
        assert!(reduce_to_odd(&odd).is_err());
    }

    #[test]
    fn odd_reductions_of_beta_are_full_cycles() {
        for n in (4..=80).step_by(2) {
            let r = reduce_to_odd(&beta_pi(n).unwrap()).unwrap();
            assert_eq!(r.order(), n - 1);
            assert!(r.is_full_cycle(), "reduced beta({n}) is not a single cycle");
        }
    }
}
