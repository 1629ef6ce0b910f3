//! Parameter grids: JSON-readable sweep configuration.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::ParamPoint;

/// Values for one symbol: an evenly spaced range or an explicit list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum Range {
    Linear { min: f64, max: f64, steps: usize },
    Values { values: Vec<f64> },
}

impl Range {
    pub fn values(&self) -> Result<Vec<f64>> {
        match self {
            Range::Linear { min, max, steps } => {
                if *steps == 0 {
                    return Err(Error::Params("steps must be at least 1".into()));
                }
                if min.is_nan() || max.is_nan() || min > max {
                    return Err(Error::Params(format!("min {min} exceeds max {max}")));
                }
                if *steps == 1 {
                    return Ok(vec![*min]);
                }
                let h = (max - min) / (*steps - 1) as f64;
                Ok((0..*steps).map(|i| if i + 1 == *steps { *max } else { min + h * i as f64 }).collect())
            }
            Range::Values { values } => {
                if values.is_empty() {
                    return Err(Error::Params("empty value list".into()));
                }
                Ok(values.clone())
            }
        }
    }
}

/// Sweep configuration for one catalog entry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub id: String,
    pub ranges: BTreeMap<String, Range>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl GridSpec {
    pub fn new(id: &str) -> Self {
        GridSpec { id: id.to_string(), ranges: BTreeMap::new(), tolerance: None }
    }

    pub fn values(mut self, symbol: &str, values: Vec<f64>) -> Self {
        self.ranges.insert(symbol.to_string(), Range::Values { values });
        self
    }

    pub fn tolerance(mut self, tol: f64) -> Self {
        self.tolerance = Some(tol);
        self
    }

    /// Cartesian product of all ranges, in symbol order.
    pub fn points(&self) -> Result<Vec<ParamPoint>> {
        let mut points = vec![ParamPoint::default()];
        for (symbol, range) in &self.ranges {
            let vals = range.values()?;
            points = points.into_iter().flat_map(|p| vals.iter().map(move |&v| p.clone().with(symbol, v))).collect();
        }
        Ok(points)
    }
}

/// Reads a JSON array of grid specs.
pub fn load_grid_file(path: &Path) -> Result<Vec<GridSpec>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Params(format!("cannot read grid file {}: {e}", path.display())))?;
    parse_grid_json(&text)
}

pub fn parse_grid_json(text: &str) -> Result<Vec<GridSpec>> {
    let specs: Vec<GridSpec> =
        serde_json::from_str(text).map_err(|e| Error::Params(format!("invalid grid file: {e}")))?;
    for spec in &specs {
        for range in spec.ranges.values() {
            range.values()?;
        }
    }
    Ok(specs)
}

/// `m` values spread geometrically over [lo, hi].
pub fn logspread(lo: f64, hi: f64, m: usize) -> Vec<f64> {
    if m == 1 {
        return vec![lo];
    }
    let ratio = hi / lo;
    (0..m).map(|i| if i + 1 == m { hi } else { lo * ratio.powf(i as f64 / (m - 1) as f64) }).collect()
}

/// [`logspread`] over [0.3, 4] shifted by `offset`.
pub fn spread(offset: f64) -> Vec<f64> {
    logspread(0.3, 4.0, 7).into_iter().map(|v| v + offset).collect()
}

pub const Z_VALUES: [f64; 7] = [-0.9, -0.5, -0.1, 0.1, 0.3, 0.45, 0.9];
pub const N_VALUES: [f64; 6] = [1.0, 2.0, 3.0, 5.0, 10.0, 25.0];

/// The standard z values inside [lo, hi].
pub fn z_within(lo: f64, hi: f64) -> Vec<f64> {
    Z_VALUES.iter().copied().filter(|z| (lo..=hi).contains(z)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_range() {
        let r = Range::Linear { min: 0.0, max: 1.0, steps: 5 };
        assert_eq!(r.values().unwrap(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(Range::Linear { min: 2.0, max: 2.0, steps: 1 }.values().unwrap(), vec![2.0]);
        assert!(Range::Linear { min: 0.0, max: 1.0, steps: 0 }.values().is_err());
        assert!(Range::Linear { min: 1.0, max: 0.0, steps: 3 }.values().is_err());
    }

    #[test]
    fn spread_endpoints() {
        let v = logspread(0.3, 4.0, 7);
        assert_eq!(v[0], 0.3);
        assert_eq!(v[6], 4.0);
        assert!((v[3] - (0.3f64 * 4.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"[{"id":"T4","ranges":{"a":{"min":0.5,"max":1.5,"steps":3},"b":{"values":[1.0]},"c":{"values":[9.0]}},"tolerance":1e-9}]"#;
        let specs = parse_grid_json(text).unwrap();
        assert_eq!(specs.len(), 1);
        assert_eq!(specs[0].points().unwrap().len(), 3);
        let again: Vec<GridSpec> = serde_json::from_str(&serde_json::to_string(&specs).unwrap()).unwrap();
        assert_eq!(again, specs);
    }

    #[test]
    fn malformed_grids_rejected() {
        assert!(parse_grid_json("{").is_err());
        assert!(parse_grid_json(r#"[{"id":"T4","ranges":{"a":{"min":2,"max":1,"steps":3}}}]"#).is_err());
        assert!(parse_grid_json(r#"[{"id":"T4","ranges":{"a":{"low":2}}}]"#).is_err());
    }

    #[test]
    fn product_size() {
        let g = GridSpec::new("X").values("a", vec![1.0, 2.0]).values("b", vec![3.0, 4.0, 5.0]);
        assert_eq!(g.points().unwrap().len(), 6);
    }
}
