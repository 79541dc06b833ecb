use super::dataset::Dataset;
use super::space::{Code, DataPoint};
use crate::error::{Error, Result};

/// Number of attributes on which `a` and `b` differ.
pub fn dissimilarity(a: &[Code], b: &[Code]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(hamming(a, b))
}

/// Unchecked [`dissimilarity`] for the hot paths, where lengths are already
/// known to agree.
#[inline]
pub(crate) fn hamming(a: &[Code], b: &[Code]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Summed dissimilarity of `rows` to `z`; zero for no rows.
pub fn summed_dissimilarity<'a, I>(rows: I, z: &[Code]) -> Result<u64>
where
    I: IntoIterator<Item = &'a [Code]>,
{
    rows.into_iter().map(|r| dissimilarity(r, z).map(|d| d as u64)).sum()
}

/// Per-row sums of attribute counts, `S_i = sum_j n(x_j^(i))`.
///
/// Average density is `S_i / (m N)`; keeping the integer numerator lets
/// callers compare densities exactly.
pub fn density_numerators(dataset: &Dataset) -> Vec<u64> {
    let table = dataset.frequency_table();
    dataset
        .rows()
        .map(|row| row.iter().enumerate().map(|(j, &c)| table[j][c as usize] as u64).sum())
        .collect()
}

/// Average density of every row.
pub fn densities(dataset: &Dataset) -> Vec<f64> {
    let denom = (dataset.n_attributes() * dataset.n_rows()) as f64;
    density_numerators(dataset)
        .into_iter()
        .map(|s| s as f64 / denom)
        .collect()
}

/// Average density of row `i`: the mean relative frequency of its categories.
pub fn density(dataset: &Dataset, i: usize) -> Result<f64> {
    dataset.get(i)?;
    let table = dataset.frequency_table();
    let n = dataset.n_rows() as f64;
    let m = dataset.n_attributes() as f64;
    let total: f64 = dataset
        .row(i)
        .iter()
        .enumerate()
        .map(|(j, &c)| table[j][c as usize] as f64 / n)
        .sum();
    Ok(total / m)
}

/// Total within-cluster dissimilarity for an assignment of every row to one
/// of `modes`.
pub fn cost_of(dataset: &Dataset, assignment: &[usize], modes: &[DataPoint]) -> Result<u64> {
    if assignment.len() != dataset.n_rows() {
        return Err(Error::LengthMismatch {
            expected: dataset.n_rows(),
            found: assignment.len(),
        });
    }
    let k = modes.len();
    for mode in modes {
        dataset.space().validate(mode)?;
    }
    let mut total = 0u64;
    for (i, &l) in assignment.iter().enumerate() {
        if l >= k {
            return Err(Error::Unassigned { row: i, k });
        }
        total += hamming(dataset.row(i), &modes[l]) as u64;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_points_have_zero_dissimilarity() {
        assert_eq!(dissimilarity(&[3, 1, 4], &[3, 1, 4]).unwrap(), 0);
    }

    #[test]
    fn positional_count() {
        assert_eq!(dissimilarity(&[0, 1, 2], &[1, 0, 2]).unwrap(), 2);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(matches!(
            dissimilarity(&[0, 1], &[0]),
            Err(Error::LengthMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn summed_dissimilarity_examples() {
        let x: &[Code] = &[1, 2];
        assert_eq!(summed_dissimilarity([x], x).unwrap(), 0);
        let rows: [&[Code]; 3] = [&[0, 0], &[0, 1], &[1, 1]];
        assert_eq!(summed_dissimilarity(rows, &[0, 1]).unwrap(), 2);
        assert_eq!(summed_dissimilarity(std::iter::empty(), &[0, 1]).unwrap(), 0);
    }

    #[test]
    fn density_of_identical_rows_is_one() {
        let ds = Dataset::from_code_rows(&[vec![1, 2], vec![1, 2], vec![1, 2]]).unwrap();
        for i in 0..3 {
            assert_eq!(density(&ds, i).unwrap(), 1.0);
        }
    }

    #[test]
    fn density_hand_example() {
        let ds = Dataset::from_labels(&[vec!["a", "x"], vec!["a", "y"], vec!["b", "x"]]).unwrap();
        assert!((density(&ds, 0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(density_numerators(&ds), vec![4, 3, 3]);
        assert!(density(&ds, 3).is_err());
    }

    #[test]
    fn cost_examples() {
        let ds = Dataset::from_code_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        let singletons = [ds.point(0), ds.point(1)];
        assert_eq!(cost_of(&ds, &[0, 1], &singletons).unwrap(), 0);
        assert_eq!(cost_of(&ds, &[0, 0], &[ds.point(0)]).unwrap(), 2);
        assert!(matches!(
            cost_of(&ds, &[0, 2], &singletons),
            Err(Error::Unassigned { row: 1, k: 2 })
        ));
    }
}
