//! Weight-space search.

use std::cmp::Ordering;

use jetbound_core::WeightVector;

use crate::report::ReportRecord;

/// Smallest `|a|` of an admissible vector of length `k`.
pub fn min_total(k: usize) -> u64 {
    jetbound_core::default_weights(k).total()
}

/// Admissible vectors of length `k` with `|a| = total`, lexicographic.
pub fn admissible_with_total(k: usize, total: u64) -> Vec<WeightVector> {
    let mut out = Vec::new();
    let mut tail = vec![0u64; k];
    // fill a_k, a_{k-1}, …, a_2 from the back; a_1 takes the remainder
    fn rec(pos: usize, left: u64, tail: &mut Vec<u64>, out: &mut Vec<WeightVector>) {
        let k = tail.len();
        if pos == 0 {
            tail[0] = left;
            if let Ok(w) = WeightVector::new(tail.clone()) {
                out.push(w);
            }
            return;
        }
        let lo = if pos == k - 1 {
            1
        } else if pos == k - 2 {
            2 * tail[pos + 1]
        } else {
            3 * tail[pos + 1]
        };
        // a_1 >= 2 * a_2 at least, so a_pos <= left / 3 suffices as an upper cut
        let mut v = lo;
        while v * 3 <= left {
            tail[pos] = v;
            rec(pos - 1, left - v, tail, out);
            v += 1;
        }
    }
    if k == 1 {
        return WeightVector::new(vec![total]).into_iter().collect();
    }
    rec(k - 1, total, &mut tail, &mut out);
    out.sort();
    out
}

/// The first `budget` admissible vectors ordered by `|a|`, then lexicographically.
pub fn candidates(k: usize, budget: usize) -> Vec<WeightVector> {
    let mut out = Vec::with_capacity(budget);
    let mut total = min_total(k);
    while out.len() < budget {
        let mut batch = admissible_with_total(k, total);
        batch.truncate(budget - out.len());
        out.extend(batch);
        total += 1;
    }
    out
}

/// Ranking: smaller threshold first (absent last), then smaller `|a|`, then
/// lexicographic weights.
pub fn rank(x: &ReportRecord, y: &ReportRecord) -> Ordering {
    let t = |r: &ReportRecord| r.threshold.map_or((1, 0), |t| (0, t));
    t(x).cmp(&t(y))
        .then_with(|| {
            x.weights
                .iter()
                .sum::<u64>()
                .cmp(&y.weights.iter().sum::<u64>())
        })
        .then_with(|| x.weights.cmp(&y.weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use jetbound_core::is_admissible;

    fn brute(k: usize, total: u64) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut cur = vec![1u64; k];
        loop {
            if cur.iter().sum::<u64>() == total && is_admissible(&cur) {
                out.push(cur.clone());
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if cur[pos] < total {
                    cur[pos] += 1;
                    break;
                }
                cur[pos] = 1;
            }
        }
    }

    #[test]
    fn matches_brute_force() {
        for k in 1..=3 {
            for total in 1..=24 {
                let got: Vec<Vec<u64>> = admissible_with_total(k, total)
                    .iter()
                    .map(|w| w.as_slice().to_vec())
                    .collect();
                assert_eq!(got, brute(k, total), "k={k} total={total}");
            }
        }
    }

    #[test]
    fn candidate_order() {
        let c: Vec<Vec<u64>> = candidates(2, 5)
            .iter()
            .map(|w| w.as_slice().to_vec())
            .collect();
        assert_eq!(
            c,
            [vec![2, 1], vec![3, 1], vec![4, 1], vec![4, 2], vec![5, 1]]
        );
        assert_eq!(candidates(3, 1)[0].as_slice(), &[6, 2, 1]);
        assert_eq!(candidates(1, 3).len(), 3);
    }
}
