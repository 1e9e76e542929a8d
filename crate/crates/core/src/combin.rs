//! Binomial coefficients and lexicographic k-subset enumeration, ranking and
//! unranking. Subsets are ordered by their sorted entry sequences, so
//! {1,2} < {1,3} < {1,4} < {2,3}; this order defines the canonical vertex
//! rank used by every file format.

/// Exact binomial coefficient `C(n, k)`. Values stay within `u64` for the
/// supported range `n <= 64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// All k-subsets of `{1, ..., n}` in lexicographic order, as sorted entry
/// vectors.
pub fn k_subsets_lex(n: u32, k: u32) -> Vec<Vec<u32>> {
    let k = k as usize;
    let mut out = Vec::with_capacity(binomial(n as u64, k as u64) as usize);
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    if (k as u32) > n {
        return out;
    }
    let mut cur: Vec<u32> = (1..=k as u32).collect();
    loop {
        out.push(cur.clone());
        // Advance to the successor in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (k - 1 - i) as u32 {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lexicographic rank (0-based) of a sorted k-subset of `{1, ..., n}`.
pub fn lex_rank(n: u32, subset: &[u32]) -> u64 {
    let k = subset.len() as u64;
    let mut rank = 0u64;
    let mut prev = 0u32;
    for (i, &c) in subset.iter().enumerate() {
        for j in prev + 1..c {
            rank += binomial((n - j) as u64, k - 1 - i as u64);
        }
        prev = c;
    }
    rank
}

/// Inverse of [`lex_rank`]: the k-subset of `{1, ..., n}` at the given
/// 0-based lexicographic rank.
pub fn lex_unrank(n: u32, k: u32, mut rank: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    let mut next = 1u32;
    for i in 0..k {
        let mut c = next;
        loop {
            let below = binomial((n - c) as u64, (k - 1 - i) as u64);
            if rank < below {
                break;
            }
            rank -= below;
            c += 1;
        }
        out.push(c);
        next = c + 1;
    }
    out
}
