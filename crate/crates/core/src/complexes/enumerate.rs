//! Bases of weight pieces. For a graded algebra every structure map of the
//! complexes preserves total weight, so truncation modulo `F_N` is the sum
//! of the pieces of weight `< N`.

use crate::tensor::Word;

/// Tuples `(w_0, …)` with `w_i ≥ mins[i]` and `Σ w_i = total`.
pub fn compositions_of(total: u32, mins: &[u32]) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, mins: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == mins.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest_min: u32 = mins[i + 1..].iter().sum();
        if left < mins[i] + rest_min {
            return;
        }
        for w in mins[i]..=left - rest_min {
            cur.push(w);
            rec(i + 1, left - w, mins, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, total, mins, &mut Vec::new(), &mut out);
    out
}

/// Words of the given total weight whose `i`-th letter has weight at least
/// `mins[i]`; `by_weight(w)` lists the basis elements of weight `w`.
pub fn words_of_weight<B: Clone + Ord, F: Fn(u32) -> Vec<B>>(total: u32, mins: &[u32], by_weight: F) -> Vec<Word<B>> {
    let mut out = Vec::new();
    for comp in compositions_of(total, mins) {
        let mut acc: Vec<Vec<B>> = vec![Vec::new()];
        for &w in &comp {
            let letters = by_weight(w);
            let mut next = Vec::with_capacity(acc.len() * letters.len());
            for prefix in &acc {
                for l in &letters {
                    let mut p = prefix.clone();
                    p.push(l.clone());
                    next.push(p);
                }
            }
            acc = next;
        }
        out.extend(acc.into_iter().map(Word));
    }
    out.sort();
    out
}

/// Basis of `B_n` in weight `total`; normalized words use only letters of
/// positive weight.
pub fn bar_words<B: Clone + Ord, F: Fn(u32) -> Vec<B>>(n: usize, total: u32, normalized: bool, by_weight: F) -> Vec<Word<B>> {
    let mins = vec![u32::from(normalized); n];
    words_of_weight(total, &mins, by_weight)
}

/// Basis of `E_n` or `C_n` (words of length `n + 1`) in weight `total`;
/// normalization constrains every letter but the first.
pub fn canonical_words<B: Clone + Ord, F: Fn(u32) -> Vec<B>>(
    n: usize,
    total: u32,
    normalized: bool,
    by_weight: F,
) -> Vec<Word<B>> {
    let mut mins = vec![u32::from(normalized); n + 1];
    mins[0] = 0;
    words_of_weight(total, &mins, by_weight)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(compositions_of(2, &[0, 1]).len(), 2);
        // E_1(U(Q)) mod F_2: 1⊗1, 1⊗x, x⊗1
        let by_weight = |w: u32| vec![w];
        let mut all = Vec::new();
        for w in 0..2 {
            all.extend(canonical_words(1, w, false, by_weight));
        }
        assert_eq!(all.len(), 3);
        // normalized B_2 of U(Q)/F_2 is spanned by words of weight ≥ 2
        let b2: usize = (0..2).map(|w| bar_words(2, w, true, by_weight).len()).sum();
        assert_eq!(b2, 0);
    }
}
