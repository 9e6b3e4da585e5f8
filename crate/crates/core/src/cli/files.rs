//! JSON documents for plants and targets.
//!
//! Plant data is always exact: coefficients are strings such as `"7"` or
//! `"-5/12"`, and polynomial entries list coefficients in ascending degree.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polemap::TargetPoly;
use crate::ratpoly::{format_rat, parse_rat, Rat, RatMatrix, RatPoly, RatPolyMatrix};
use crate::sysmodel::{PlantModel, Provenance, StateSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Mfd,
    StateSpace,
}

type PolyEntries = Vec<Vec<Vec<String>>>;
type ScalarEntries = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub m: usize,
    pub p: usize,
    pub n: usize,
    pub representation: Representation,
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub d: Option<PolyEntries>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n_mat: Option<PolyEntries>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<ScalarEntries>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<ScalarEntries>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<ScalarEntries>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

fn parse_error(location: String, message: impl Into<String>) -> Error {
    Error::Parse {
        location,
        message: message.into(),
    }
}

fn required<'a, T>(field: &'a Option<T>, name: &str) -> Result<&'a T> {
    field
        .as_ref()
        .ok_or_else(|| parse_error(name.to_string(), "field is required for this representation"))
}

fn check_shape<T>(rows: &[Vec<T>], want_rows: usize, want_cols: usize, name: &str) -> Result<()> {
    if rows.len() != want_rows {
        return Err(parse_error(
            name.to_string(),
            format!("expected {want_rows} rows, found {}", rows.len()),
        ));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != want_cols {
            return Err(parse_error(
                format!("{name}[{i}]"),
                format!("expected {want_cols} entries, found {}", row.len()),
            ));
        }
    }
    Ok(())
}

fn parse_scalar_matrix(rows: &ScalarEntries, r: usize, c: usize, name: &str) -> Result<RatMatrix> {
    check_shape(rows, r, c, name)?;
    let mut out = Vec::with_capacity(r);
    for (i, row) in rows.iter().enumerate() {
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, s)| parse_rat(s).map_err(|msg| parse_error(format!("{name}[{i}][{j}]"), msg)))
            .collect::<Result<Vec<Rat>>>()?;
        out.push(parsed);
    }
    RatMatrix::from_rows(out)
}

fn parse_poly_matrix(rows: &PolyEntries, r: usize, c: usize, name: &str) -> Result<RatPolyMatrix> {
    check_shape(rows, r, c, name)?;
    let mut out = Vec::with_capacity(r);
    for (i, row) in rows.iter().enumerate() {
        let mut parsed = Vec::with_capacity(c);
        for (j, coeffs) in row.iter().enumerate() {
            let cs = coeffs
                .iter()
                .enumerate()
                .map(|(k, s)| parse_rat(s).map_err(|msg| parse_error(format!("{name}[{i}][{j}][{k}]"), msg)))
                .collect::<Result<Vec<Rat>>>()?;
            parsed.push(RatPoly::new(cs));
        }
        out.push(parsed);
    }
    RatPolyMatrix::from_rows(out)
}

fn write_scalar_matrix(m: &RatMatrix) -> ScalarEntries {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rat).collect())
        .collect()
}

fn write_poly_matrix(m: &RatPolyMatrix) -> PolyEntries {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|p| p.coeffs().iter().map(format_rat).collect())
                .collect()
        })
        .collect()
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Build and validate the plant, checking the declared sizes.
    pub fn to_plant(&self) -> Result<PlantModel> {
        if self.m == 0 || self.p == 0 || self.n == 0 {
            return Err(parse_error("m, p, n".into(), "sizes must be positive"));
        }
        let plant = match self.representation {
            Representation::Mfd => {
                for (field, name) in [(&self.a, "A"), (&self.b, "B"), (&self.c, "C")] {
                    if field.is_some() {
                        return Err(parse_error(name.into(), "not allowed with representation \"mfd\""));
                    }
                }
                let d = parse_poly_matrix(required(&self.d, "D")?, self.p, self.p, "D")?;
                let n = parse_poly_matrix(required(&self.n_mat, "N")?, self.p, self.m, "N")?;
                PlantModel::from_mfd(d, n)?
            }
            Representation::StateSpace => {
                for (field, name) in [(&self.d, "D"), (&self.n_mat, "N")] {
                    if field.is_some() {
                        return Err(parse_error(
                            name.into(),
                            "not allowed with representation \"state_space\"",
                        ));
                    }
                }
                let a = parse_scalar_matrix(required(&self.a, "A")?, self.n, self.n, "A")?;
                let b = parse_scalar_matrix(required(&self.b, "B")?, self.n, self.m, "B")?;
                let c = parse_scalar_matrix(required(&self.c, "C")?, self.p, self.n, "C")?;
                PlantModel::from_state_space(StateSpace::new(a, b, c)?)?
            }
        };
        if plant.n != self.n {
            return Err(parse_error(
                "n".into(),
                format!("declared n = {} but det D has degree {}", self.n, plant.n),
            ));
        }
        Ok(plant)
    }

    /// Describe `plant` as a file. Plants that carry a fraction form are
    /// written in that form.
    pub fn from_plant(plant: &PlantModel, name: Option<String>, source: Option<String>) -> Result<Self> {
        let mut file = SystemFile {
            name,
            source,
            m: plant.m,
            p: plant.p,
            n: plant.n,
            representation: Representation::Mfd,
            d: None,
            n_mat: None,
            a: None,
            b: None,
            c: None,
        };
        match (&plant.mfd, &plant.state_space, plant.provenance) {
            (Some(mfd), _, _) => {
                file.d = Some(write_poly_matrix(&mfd.d));
                file.n_mat = Some(write_poly_matrix(&mfd.n));
            }
            (None, Some(ss), Provenance::StateSpaceGiven) => {
                file.representation = Representation::StateSpace;
                file.a = Some(write_scalar_matrix(&ss.a));
                file.b = Some(write_scalar_matrix(&ss.b));
                file.c = Some(write_scalar_matrix(&ss.c));
            }
            _ => return Err(Error::Internal("plant without any representation".into())),
        }
        Ok(file)
    }
}

/// Target document: `{"roots": [...]}` or `{"coeffs": [...]}` (ascending).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub enum TargetSpec {
    Roots(Vec<String>),
    Coeffs(Vec<String>),
}

impl TargetSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn to_target(&self) -> Result<TargetPoly> {
        let parse_all = |xs: &[String], name: &str| {
            xs.iter()
                .enumerate()
                .map(|(i, s)| parse_rat(s).map_err(|msg| parse_error(format!("{name}[{i}]"), msg)))
                .collect::<Result<Vec<Rat>>>()
        };
        match self {
            TargetSpec::Roots(r) => TargetPoly::from_roots(parse_all(r, "roots")?),
            TargetSpec::Coeffs(c) => {
                let poly = RatPoly::new(parse_all(c, "coeffs")?);
                if !poly.is_monic() {
                    return Err(parse_error("coeffs".into(), "target polynomial must be monic"));
                }
                TargetPoly::from_coeffs(poly)
            }
        }
    }

    pub fn from_target(target: &TargetPoly) -> Self {
        match target.roots() {
            Some(r) => TargetSpec::Roots(r.iter().map(format_rat).collect()),
            None => TargetSpec::Coeffs(target.poly().coeffs().iter().map(format_rat).collect()),
        }
    }
}

/// Interpret a command-line target: a path to a target document, or an
/// inline root list such as `-8,-6,1/2`.
pub fn resolve_target(arg: &str) -> Result<TargetPoly> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
        return TargetSpec::parse(&text)?.to_target();
    }
    TargetPoly::parse_roots(arg)
}
