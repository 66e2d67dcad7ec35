use super::require_avoids;
use crate::error::Result;
use crate::perm::Perm;
use crate::set_stats::lrmax;

/// Simion–Schmidt map `Av(312) → Av(321)`: left-to-right maxima stay in
/// place and the remaining entries are rewritten in increasing order.
pub fn psi(p: &Perm) -> Result<Perm> {
    require_avoids(p, &[3, 1, 2])?;
    let maxima = lrmax(p);
    let mut is_max = vec![false; p.len()];
    for &(i, _) in maxima.as_slice() {
        is_max[i - 1] = true;
    }
    let mut rest: Vec<usize> = p
        .values()
        .iter()
        .zip(&is_max)
        .filter(|(_, &m)| !m)
        .map(|(&v, _)| v)
        .collect();
    rest.sort_unstable();
    let mut rest = rest.into_iter();
    let values = p
        .values()
        .iter()
        .zip(&is_max)
        .map(|(&v, &m)| if m { v } else { rest.next().unwrap() })
        .collect();
    Ok(Perm::from_vec_unchecked(values))
}

/// Inverse of [`psi`]: keep the left-to-right maxima and fill each other
/// position with the largest unused value below the current maximum.
pub fn psi_inverse(p: &Perm) -> Result<Perm> {
    require_avoids(p, &[3, 2, 1])?;
    let n = p.len();
    let maxima = lrmax(p);
    let mut is_max = vec![false; n];
    let mut used = vec![false; n + 1];
    for &(i, v) in maxima.as_slice() {
        is_max[i - 1] = true;
        used[v] = true;
    }
    let mut current = 0;
    let mut values = Vec::with_capacity(n);
    for (i, &v) in p.values().iter().enumerate() {
        if is_max[i] {
            current = v;
            values.push(v);
        } else {
            let pick = (1..current)
                .rev()
                .find(|&u| !used[u])
                .expect("a 321-avoider always leaves a free value below the running maximum");
            used[pick] = true;
            values.push(pick);
        }
    }
    Ok(Perm::from_vec_unchecked(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn pinned_example() {
        assert_eq!(psi(&p("32658741")).unwrap(), p("31628457"));
        assert_eq!(psi_inverse(&p("31628457")).unwrap(), p("32658741"));
    }

    #[test]
    fn decreasing_and_identity() {
        for n in 1..=8 {
            let mut expected = vec![n];
            expected.extend(1..n);
            assert_eq!(
                psi(&Perm::decreasing(n)).unwrap(),
                Perm::new(expected).unwrap()
            );
            assert_eq!(psi(&Perm::identity(n)).unwrap(), Perm::identity(n));
            assert_eq!(psi_inverse(&Perm::identity(n)).unwrap(), Perm::identity(n));
        }
    }

    #[test]
    fn preconditions() {
        assert!(matches!(psi(&p("312")), Err(Error::ContainsPattern { .. })));
        assert!(matches!(
            psi_inverse(&p("321")),
            Err(Error::ContainsPattern { .. })
        ));
    }
}
