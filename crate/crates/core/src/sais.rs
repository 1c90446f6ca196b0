//! Linear-time suffix array construction by induced sorting (SA-IS).
//!
//! Works on a shifted copy of the input so that the value 0 is free to act
//! as a unique smallest sentinel. With the sentinel smaller than every real
//! byte, a suffix that is a proper prefix of another sorts first, which is
//! exactly the comparison order of `&[u8]`.

/// Marker for an unfilled suffix-array slot during induction.
const EMPTY: usize = usize::MAX;

/// Sorts all suffixes of `bytes` and returns their 1-based start positions
/// in lexicographic order. `bytes` must be non-empty.
pub(crate) fn suffix_array(bytes: &[u8]) -> Vec<u32> {
    let n = bytes.len();
    debug_assert!(n >= 1);
    if n == 1 {
        return vec![1];
    }
    let mut text: Vec<u32> = Vec::with_capacity(n + 1);
    text.extend(bytes.iter().map(|&b| u32::from(b) + 1));
    text.push(0);
    let mut sa = vec![EMPTY; n + 1];
    sais(&text, 257, &mut sa);
    // The sentinel suffix sorts first; drop it and shift to 1-based.
    sa[1..].iter().map(|&p| (p + 1) as u32).collect()
}

/// Recursive SA-IS. `text` values are < `sigma` and the last element is a
/// unique smallest sentinel. Fills `sa` (same length as `text`) with the
/// 0-based suffix start positions in sorted order.
fn sais(text: &[u32], sigma: usize, sa: &mut [usize]) {
    let n = text.len();
    if n == 1 {
        sa[0] = 0;
        return;
    }

    // Suffix types: true = S (smaller than the next suffix). The sentinel
    // is S by definition; everything else propagates from the right.
    let mut is_s = vec![false; n];
    is_s[n - 1] = true;
    for i in (0..n - 1).rev() {
        is_s[i] = text[i] < text[i + 1] || (text[i] == text[i + 1] && is_s[i + 1]);
    }
    // Leftmost-S positions, ascending. The sentinel is always one of them.
    let lms: Vec<usize> = (1..n).filter(|&i| is_s[i] && !is_s[i - 1]).collect();

    let counts = bucket_sizes(text, sigma);

    // First induction: seed the LMS positions in arbitrary (text) order;
    // afterwards the LMS substrings appear in sa in sorted order.
    sa.fill(EMPTY);
    let mut tails = bucket_tails(&counts);
    for &p in lms.iter().rev() {
        let c = text[p] as usize;
        tails[c] -= 1;
        sa[tails[c]] = p;
    }
    induce(text, &is_s, &counts, sa);

    // Name LMS substrings by rank; equal substrings share a name.
    let mut name_of = vec![0u32; n];
    let mut name_count = 0usize;
    {
        let mut prev = EMPTY;
        for &p in sa.iter() {
            if p != EMPTY && p > 0 && is_s[p] && !is_s[p - 1] {
                if prev == EMPTY || !lms_substrings_equal(text, &is_s, prev, p) {
                    name_count += 1;
                }
                name_of[p] = (name_count - 1) as u32;
                prev = p;
            }
        }
    }

    let mut reduced_sa = vec![EMPTY; lms.len()];
    {
        let reduced: Vec<u32> = lms.iter().map(|&p| name_of[p]).collect();
        drop(name_of);
        if name_count == lms.len() {
            // All LMS substrings distinct: the reduced order is immediate.
            for (i, &name) in reduced.iter().enumerate() {
                reduced_sa[name as usize] = i;
            }
        } else {
            sais(&reduced, name_count, &mut reduced_sa);
        }
    }

    // Second induction: seed the LMS positions in their true sorted order.
    sa.fill(EMPTY);
    let mut tails = bucket_tails(&counts);
    for r in (0..reduced_sa.len()).rev() {
        let p = lms[reduced_sa[r]];
        let c = text[p] as usize;
        tails[c] -= 1;
        sa[tails[c]] = p;
    }
    induce(text, &is_s, &counts, sa);
}

/// One round of induced sorting: place L-type suffixes left to right, then
/// S-type suffixes right to left.
fn induce(text: &[u32], is_s: &[bool], counts: &[usize], sa: &mut [usize]) {
    let n = text.len();
    let mut heads = bucket_heads(counts);
    for i in 0..n {
        let p = sa[i];
        if p != EMPTY && p > 0 && !is_s[p - 1] {
            let c = text[p - 1] as usize;
            sa[heads[c]] = p - 1;
            heads[c] += 1;
        }
    }
    let mut tails = bucket_tails(counts);
    for i in (0..n).rev() {
        let p = sa[i];
        if p != EMPTY && p > 0 && is_s[p - 1] {
            let c = text[p - 1] as usize;
            tails[c] -= 1;
            sa[tails[c]] = p - 1;
        }
    }
}

/// Two LMS substrings are equal iff their characters match and they end at
/// their next LMS boundary simultaneously. Types inside an equal-length,
/// equal-character span coincide, so comparing characters suffices.
fn lms_substrings_equal(text: &[u32], is_s: &[bool], a: usize, b: usize) -> bool {
    if a == b {
        return true;
    }
    let is_lms = |i: usize| i > 0 && is_s[i] && !is_s[i - 1];
    let mut i = 0;
    loop {
        if text[a + i] != text[b + i] {
            return false;
        }
        if i > 0 {
            let la = is_lms(a + i);
            let lb = is_lms(b + i);
            if la || lb {
                return la && lb;
            }
        }
        i += 1;
    }
}

fn bucket_sizes(text: &[u32], sigma: usize) -> Vec<usize> {
    let mut counts = vec![0usize; sigma];
    for &c in text {
        counts[c as usize] += 1;
    }
    counts
}

/// `heads[c]` = index of the first slot of bucket `c`.
fn bucket_heads(counts: &[usize]) -> Vec<usize> {
    let mut heads = Vec::with_capacity(counts.len());
    let mut sum = 0usize;
    for &c in counts {
        heads.push(sum);
        sum += c;
    }
    heads
}

/// `tails[c]` = one past the last slot of bucket `c`.
fn bucket_tails(counts: &[usize]) -> Vec<usize> {
    let mut tails = Vec::with_capacity(counts.len());
    let mut sum = 0usize;
    for &c in counts {
        sum += c;
        tails.push(sum);
    }
    tails
}

#[cfg(test)]
mod tests {
    use super::suffix_array;

    /// Reference construction: sort positions by direct suffix comparison.
    fn naive(bytes: &[u8]) -> Vec<u32> {
        let mut positions: Vec<u32> = (1..=bytes.len() as u32).collect();
        positions.sort_by(|&a, &b| bytes[a as usize - 1..].cmp(&bytes[b as usize - 1..]));
        positions
    }

    #[test]
    fn small_fixed_inputs() {
        assert_eq!(suffix_array(b"a"), vec![1]);
        assert_eq!(suffix_array(b"abcbb"), vec![1, 5, 4, 2, 3]);
        assert_eq!(suffix_array(b"aaaa"), vec![4, 3, 2, 1]);
        assert_eq!(suffix_array(b"abcabc"), vec![4, 1, 5, 2, 6, 3]);
        assert_eq!(suffix_array(b"banana"), naive(b"banana"));
        assert_eq!(suffix_array(b"mississippi"), naive(b"mississippi"));
    }

    #[test]
    fn handles_all_byte_values() {
        let text: Vec<u8> = (0..=255u8).cycle().take(600).collect();
        assert_eq!(suffix_array(&text), naive(&text));
        let with_zeros = b"\x00ab\x00\x00ab\x00".to_vec();
        assert_eq!(suffix_array(&with_zeros), naive(&with_zeros));
        assert_eq!(suffix_array(&[0, 0, 0]), vec![3, 2, 1]);
    }

    #[test]
    fn matches_naive_on_seeded_random_texts() {
        // Small alphabets force deep recursion inside SA-IS.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..400 {
            let n = (next() % 500 + 1) as usize;
            let sigma = [1u64, 2, 4, 26, 256][round % 5];
            let bytes: Vec<u8> = (0..n).map(|_| (next() % sigma) as u8).collect();
            assert_eq!(suffix_array(&bytes), naive(&bytes), "text {:?}", bytes);
        }
    }
}
