use super::FieldSpec;

/// Rank over F_q of the given row vectors (Gaussian elimination).
pub fn rank(field: &FieldSpec, rows: &[Vec<u32>]) -> usize {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = field.inv(m[rank][col]).expect("pivot is nonzero");
        for c in m[rank].iter_mut() {
            *c = field.mul(*c, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, y));
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
