use super::LinAlgError;

/// Flat index of the basis pair `(i, j)` in a tensor product: `i * dim_right + j`.
pub fn tensor_index(i: usize, j: usize, dim_left: usize, dim_right: usize) -> Result<usize, LinAlgError> {
    if i >= dim_left || j >= dim_right {
        return Err(LinAlgError::IndexOutOfRange(format!("({i}, {j}) outside {dim_left}x{dim_right}")));
    }
    Ok(i * dim_right + j)
}

/// Inverse of [`tensor_index`].
pub fn unflatten(index: usize, dim_left: usize, dim_right: usize) -> Result<(usize, usize), LinAlgError> {
    if index >= dim_left * dim_right {
        return Err(LinAlgError::IndexOutOfRange(format!("{index} outside {dim_left}x{dim_right}")));
    }
    Ok((index / dim_right, index % dim_right))
}
