use super::{k_subsets, Matroid};

/// Membership in the nested classes `M_k^r`.
///
/// `k_level` is capped at the rank. For rank at least 2 the flags satisfy
/// `simple <=> k_level >= 2` and `loopless <=> k_level >= 1`; at rank 0 and 1
/// the flags follow the element-level definitions directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MatroidClass {
    pub loopless: bool,
    pub simple: bool,
    pub paving: bool,
    pub uniform: bool,
    pub k_level: usize,
}

impl MatroidClass {
    pub fn of(m: &Matroid) -> MatroidClass {
        let k_level = m.k_level();
        let r = m.rank();
        let loopless = (1..=m.n()).all(|e| m.independent(super::SubsetWord::EMPTY.with(e)));
        let simple = loopless && k_subsets(m.n(), 2).iter().all(|p| m.independent(*p));
        MatroidClass {
            loopless,
            simple,
            paving: k_level + 1 >= r,
            uniform: k_level == r,
            k_level,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::SubsetWord;

    #[test]
    fn uniform_is_everything() {
        for (r, n) in [(2, 4), (3, 7), (4, 6)] {
            let c = Matroid::uniform(r, n).classify();
            assert!(c.uniform && c.paving && c.simple && c.loopless);
            assert_eq!(c.k_level, r);
        }
    }

    #[test]
    fn loop_drops_everything() {
        let m = Matroid::new(
            4,
            vec![
                SubsetWord::from_elements([1, 2]),
                SubsetWord::from_elements([1, 3]),
                SubsetWord::from_elements([2, 3]),
            ],
        )
        .unwrap();
        let c = m.classify();
        assert!(!c.loopless && !c.simple && !c.paving && !c.uniform);
        assert_eq!(c.k_level, 0);
    }

    #[test]
    fn fano_is_paving_not_uniform() {
        let c = Matroid::fano().classify();
        assert!(c.paving && !c.uniform && c.simple);
        assert_eq!(c.k_level, 2);
    }

    #[test]
    fn parallel_pair() {
        // {1,2} parallel in a rank-2 matroid on 3 elements.
        let m = Matroid::new(
            3,
            vec![SubsetWord::from_elements([1, 3]), SubsetWord::from_elements([2, 3])],
        )
        .unwrap();
        let c = m.classify();
        assert!(c.loopless && !c.simple && c.paving && !c.uniform);
        assert_eq!(c.k_level, 1);
    }
}
