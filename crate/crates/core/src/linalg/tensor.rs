use alloc::vec::Vec;

use super::Matrix;

/// Flat index of a multi-index in a tensor product with factor dimensions `dims`.
pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), idx.len());
    dims.iter().zip(idx).fold(0, |acc, (d, i)| acc * d + i)
}

pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = alloc::vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        if dims[k] > 0 {
            out[k] = flat % dims[k];
            flat /= dims[k];
        }
    }
    out
}

/// Reorders tensor factors: output factor `k` is input factor `order[k]`.
///
/// Returns `map` with `map[input_flat] = output_flat`. `X.permute_rows(&map)`
/// is the permutation applied after `X`; `Y.permute_cols(&map)` applies it
/// before `Y`.
pub fn permute_factors(dims: &[usize], order: &[usize]) -> Vec<usize> {
    assert_eq!(dims.len(), order.len());
    let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
    let total: usize = dims.iter().product();
    (0..total)
        .map(|flat| {
            let x = multi_index(dims, flat);
            let y: Vec<usize> = order.iter().map(|&k| x[k]).collect();
            flat_index(&out_dims, &y)
        })
        .collect()
}

/// `f ⊗ g` in the lexicographic basis, left factor slowest.
pub fn tensor_map(f: &Matrix, g: &Matrix) -> Matrix {
    f.kron(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn index_round_trip() {
        let dims = [2, 3, 4];
        for flat in 0..24 {
            assert_eq!(flat_index(&dims, &multi_index(&dims, flat)), flat);
        }
    }

    #[test]
    fn swap_permutes_pure_tensors() {
        // u ⊗ v -> v ⊗ u on Q^2 ⊗ Q^3
        let map = permute_factors(&[2, 3], &[1, 0]);
        let u = [int(1), int(2)];
        let v = [int(3), int(5), int(7)];
        let uv = Matrix::column_vector(&u).kron(&Matrix::column_vector(&v));
        let vu = Matrix::column_vector(&v).kron(&Matrix::column_vector(&u));
        assert_eq!(uv.permute_rows(&map), vu);
        // the reverse swap on Q^3 ⊗ Q^2 is the inverse permutation
        let back = permute_factors(&[3, 2], &[1, 0]);
        let id = Matrix::identity(6);
        assert_eq!(id.permute_rows(&map).permute_cols(&back), id);
    }
}
