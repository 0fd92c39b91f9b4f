use std::sync::Arc;

use crate::exactlin::Vector;

use super::{AlgebraError, Enveloping, LieAlgebra};

/// The group `G = exp g` of a nilpotent Lie algebra, with elements recorded
/// by their logarithms and the product computed in `U g / F_n`.
#[derive(Clone, Debug)]
pub struct MalcevGroup {
    env: Arc<Enveloping>,
    level: u32,
}

impl MalcevGroup {
    /// Uses the truncation level `max weight + 1`, on which `exp` is
    /// injective on `g`.
    pub fn new(env: Arc<Enveloping>) -> Result<Self, AlgebraError> {
        if env.lie().nilpotency_class().is_none() {
            return Err(AlgebraError::Unsupported("Malcev group law needs a nilpotent Lie algebra".into()));
        }
        let level = env.lie().max_weight() + 1;
        Ok(Self { env, level })
    }

    pub fn from_lie(lie: LieAlgebra) -> Result<Self, AlgebraError> {
        Self::new(Arc::new(Enveloping::new(lie)))
    }

    pub fn enveloping(&self) -> &Arc<Enveloping> {
        &self.env
    }

    pub fn lie(&self) -> &LieAlgebra {
        self.env.lie()
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// `log(exp(a) exp(b))`.
    pub fn bch(&self, a: &Vector<usize>, b: &Vector<usize>) -> Vector<usize> {
        let n = self.level;
        let prod = self.env.pbw_product(&self.env.exp(a, n), &self.env.exp(b, n), n);
        let log = self.env.log(&prod, n).expect("exp has augmentation 1");
        let xi = self.env.primitive_part(&log);
        debug_assert_eq!(self.env.from_lie(&xi), log, "BCH product left g");
        xi
    }

    pub fn inverse(&self, a: &Vector<usize>) -> Vector<usize> {
        -a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{q, qr};

    #[test]
    fn heisenberg_bch() {
        let g = MalcevGroup::from_lie(LieAlgebra::heisenberg()).unwrap();
        let x = Vector::basis(0);
        let y = Vector::basis(1);
        let expected = Vector::from_terms([(0, q(1)), (1, q(1)), (2, qr(1, 2))]);
        assert_eq!(g.bch(&x, &y), expected);
        assert_eq!(g.bch(&x, &Vector::zero()), x);
        assert!(g.bch(&x, &g.inverse(&x)).is_zero());
    }

    #[test]
    fn abelian_bch_is_sum() {
        let g = MalcevGroup::from_lie(LieAlgebra::abelian(2)).unwrap();
        let a = Vector::from_terms([(0, q(2)), (1, qr(-1, 3))]);
        let b = Vector::from_terms([(0, q(5))]);
        assert_eq!(g.bch(&a, &b), &a + &b);
    }

    #[test]
    fn non_nilpotent_rejected() {
        let sl2 = LieAlgebra::new(
            vec!["e".into(), "f".into(), "h".into()],
            vec![
                (0, 1, super::super::structure(&[(2, 1)])),
                (0, 2, super::super::structure(&[(0, -2)])),
                (1, 2, super::super::structure(&[(1, 2)])),
            ],
        )
        .unwrap();
        assert!(MalcevGroup::from_lie(sl2).is_err());
    }
}
