//! Record-level categorical data.
//!
//! Every cell of a [`Dataset`] is a dense category index into its column's
//! [`Variable`] domain. Labels are opaque strings; the index of a label is
//! the order in which it first occurred in the input.

use std::collections::{HashMap, HashSet};
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Label used for missing cells under [`MissingPolicy::AsCategory`].
pub const MISSING_LABEL: &str = "NA";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variable {
    name: String,
    labels: Vec<String>,
}

impl Variable {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Self> {
        let name = name.into();
        if labels.is_empty() {
            return Err(Error::InvalidData(format!("variable `{name}` has an empty domain")));
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidData(format!(
                    "variable `{name}` repeats category `{l}`"
                )));
            }
        }
        Ok(Self { name, labels })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: u32) -> &str {
        &self.labels[index as usize]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<u32> {
        self.labels.iter().position(|l| l == label).map(|i| i as u32)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MissingPolicy {
    /// Discard every row with at least one empty cell.
    #[default]
    DropRow,
    /// Keep the row; empty cells become the category [`MISSING_LABEL`].
    AsCategory,
}

/// Immutable table of categorical records, stored column-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    variables: Vec<Variable>,
    columns: Vec<Vec<u32>>,
    n_records: usize,
}

impl Dataset {
    /// Builds a dataset from already-indexed columns.
    ///
    /// Categories that never occur are removed from the domains (the
    /// remaining ones keep their relative order).
    pub fn new(variables: Vec<Variable>, columns: Vec<Vec<u32>>) -> Result<Self> {
        let ds = Self::from_parts(variables, columns)?;
        Ok(ds.compacted())
    }

    fn from_parts(variables: Vec<Variable>, columns: Vec<Vec<u32>>) -> Result<Self> {
        if variables.len() != columns.len() {
            return Err(Error::DimensionMismatch {
                expected: variables.len(),
                found: columns.len(),
            });
        }
        if variables.is_empty() {
            return Err(Error::EmptyInput);
        }
        check_unique_names(variables.iter().map(|v| v.name()))?;
        let n_records = columns[0].len();
        for (v, col) in variables.iter().zip(&columns) {
            if col.len() != n_records {
                return Err(Error::ColumnLength(v.name().to_string()));
            }
            if let Some(&bad) = col.iter().find(|&&c| c as usize >= v.len()) {
                return Err(Error::BadIndex {
                    column: v.name().to_string(),
                    index: bad,
                    size: v.len(),
                });
            }
        }
        if n_records == 0 {
            return Err(Error::NoRecords);
        }
        Ok(Self {
            variables,
            columns,
            n_records,
        })
    }

    /// Ingests label rows. Domains are the distinct labels of each column in
    /// first-occurrence order; the empty string marks a missing cell.
    pub fn from_rows<H, R, S>(header: H, rows: R, policy: MissingPolicy) -> Result<Self>
    where
        H: IntoIterator,
        H::Item: Into<String>,
        R: IntoIterator,
        R::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let header: Vec<String> = header.into_iter().map(Into::into).collect();
        if header.is_empty() {
            return Err(Error::EmptyInput);
        }
        check_unique_names(header.iter().map(String::as_str))?;

        let width = header.len();
        let mut indexers: Vec<HashMap<String, u32>> = vec![HashMap::new(); width];
        let mut labels: Vec<Vec<String>> = vec![Vec::new(); width];
        let mut columns: Vec<Vec<u32>> = vec![Vec::new(); width];
        let mut cells: Vec<String> = Vec::with_capacity(width);

        for (row_no, row) in rows.into_iter().enumerate() {
            cells.clear();
            cells.extend(row.into_iter().map(|c| c.as_ref().to_string()));
            if cells.len() != width {
                return Err(Error::RowArity {
                    row: row_no + 1,
                    expected: width,
                    found: cells.len(),
                });
            }
            if cells.iter().any(String::is_empty) {
                match policy {
                    MissingPolicy::DropRow => continue,
                    MissingPolicy::AsCategory => {
                        for c in cells.iter_mut().filter(|c| c.is_empty()) {
                            *c = MISSING_LABEL.to_string();
                        }
                    }
                }
            }
            for (j, cell) in cells.iter().enumerate() {
                let next = labels[j].len() as u32;
                let idx = *indexers[j].entry(cell.clone()).or_insert_with(|| {
                    labels[j].push(cell.clone());
                    next
                });
                columns[j].push(idx);
            }
        }
        if columns[0].is_empty() {
            return Err(Error::NoRecords);
        }
        let variables = header
            .into_iter()
            .zip(labels)
            .map(|(name, labels)| Variable { name, labels })
            .collect();
        Self::from_parts(variables, columns)
    }

    /// Reads CSV: the first record is the header, every cell is an opaque label.
    pub fn from_csv_reader<R: Read>(reader: R, policy: MissingPolicy) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .from_reader(reader);
        let mut records = rdr.records();
        let header = match records.next() {
            Some(rec) => rec?.iter().map(str::to_string).collect::<Vec<_>>(),
            None => return Err(Error::EmptyInput),
        };
        let rows = records.collect::<std::result::Result<Vec<_>, _>>()?;
        Self::from_rows(header, rows.iter().map(|r| r.iter()), policy)
    }

    pub fn read_csv(path: impl AsRef<Path>, policy: MissingPolicy) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_csv_reader(std::io::BufReader::new(file), policy)
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(self.variables.iter().map(Variable::name))?;
        for r in 0..self.n_records {
            w.write_record(
                self.variables
                    .iter()
                    .zip(&self.columns)
                    .map(|(v, col)| v.label(col[r])),
            )?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv writer emits utf-8"))
    }

    pub fn n_records(&self) -> usize {
        self.n_records
    }

    pub fn n_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn variable(&self, index: usize) -> &Variable {
        &self.variables[index]
    }

    pub fn names(&self) -> Vec<&str> {
        self.variables.iter().map(Variable::name).collect()
    }

    pub fn column(&self, index: usize) -> &[u32] {
        &self.columns[index]
    }

    pub fn variable_index(&self, name: &str) -> Result<usize> {
        self.variables
            .iter()
            .position(|v| v.name() == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names
            .iter()
            .map(|n| self.variable_index(n.as_ref()))
            .collect()
    }

    /// Records at the given positions (repetition allowed). Domains are kept
    /// as they are, so category indices stay comparable with `self`.
    pub fn select_records(&self, rows: &[usize]) -> Dataset {
        let columns = self
            .columns
            .iter()
            .map(|col| rows.iter().map(|&r| col[r]).collect())
            .collect();
        Dataset {
            variables: self.variables.clone(),
            columns,
            n_records: rows.len(),
        }
    }

    /// Appends a column. The column must index into `variable`'s domain.
    pub fn with_variable(mut self, variable: Variable, column: Vec<u32>) -> Result<Self> {
        if self.variables.iter().any(|v| v.name() == variable.name()) {
            return Err(Error::DuplicateHeader(variable.name().to_string()));
        }
        self.variables.push(variable);
        self.columns.push(column);
        Self::from_parts(self.variables, self.columns).map(Dataset::compacted)
    }

    /// Copy restricted to the named variables, in the given order.
    pub fn project<S: AsRef<str>>(&self, names: &[S]) -> Result<Dataset> {
        let idx = self.indices_of(names)?;
        check_unique_names(names.iter().map(|n| n.as_ref()))?;
        Ok(Dataset {
            variables: idx.iter().map(|&i| self.variables[i].clone()).collect(),
            columns: idx.iter().map(|&i| self.columns[i].clone()).collect(),
            n_records: self.n_records,
        })
    }

    /// Drops categories that do not occur in the records.
    pub fn compacted(self) -> Dataset {
        let Dataset {
            variables,
            columns,
            n_records,
        } = self;
        let mut out_vars = Vec::with_capacity(variables.len());
        let mut out_cols = Vec::with_capacity(columns.len());
        for (var, col) in variables.into_iter().zip(columns) {
            let mut used = vec![false; var.len()];
            for &c in &col {
                used[c as usize] = true;
            }
            if used.iter().all(|&u| u) {
                out_vars.push(var);
                out_cols.push(col);
                continue;
            }
            let mut remap = vec![u32::MAX; var.len()];
            let mut labels = Vec::new();
            for (i, label) in var.labels.into_iter().enumerate() {
                if used[i] {
                    remap[i] = labels.len() as u32;
                    labels.push(label);
                }
            }
            out_cols.push(col.into_iter().map(|c| remap[c as usize]).collect());
            out_vars.push(Variable {
                name: var.name,
                labels,
            });
        }
        Dataset {
            variables: out_vars,
            columns: out_cols,
            n_records,
        }
    }

    /// Composite variable over the named parts (observed tuples only).
    pub fn composite<S: AsRef<str>>(&self, names: &[S]) -> Result<CompositeVariable> {
        let idx = self.indices_of(names)?;
        self.composite_of(&idx)
    }

    pub fn composite_of(&self, parts: &[usize]) -> Result<CompositeVariable> {
        let (&first, rest) = parts.split_first().ok_or(Error::EmptySelection)?;
        let mut seen = HashSet::new();
        for &p in parts {
            if p >= self.n_variables() {
                return Err(Error::UnknownVariable(format!("#{p}")));
            }
            if !seen.insert(p) {
                return Err(Error::DuplicateVariable(self.variables[p].name().to_string()));
            }
        }
        let mut comp = CompositeVariable::single(self, first);
        for &p in rest {
            comp = comp.extend(self, p);
        }
        Ok(comp)
    }

    /// Counts of the composite `x` against the single variable `y`.
    pub fn contingency<S: AsRef<str>>(&self, x: &[S], y: &str) -> Result<ContingencyTable> {
        let y_idx = self.variable_index(y)?;
        let comp = self.composite(x)?;
        self.contingency_with(&comp, y_idx)
    }

    pub fn contingency_with(&self, x: &CompositeVariable, y: usize) -> Result<ContingencyTable> {
        if x.parts().contains(&y) {
            return Err(Error::Overlap(self.variables[y].name().to_string()));
        }
        let yv = &self.variables[y];
        ContingencyTable::from_codes(
            x.name(self),
            x.labels(self),
            x.codes(),
            yv.name(),
            yv.labels().to_vec(),
            self.column(y),
        )
    }
}

fn check_unique_names<'a>(names: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(Error::DuplicateHeader(n.to_string()));
        }
    }
    Ok(())
}

/// Joint variable over several dataset columns. Its domain holds only the
/// value tuples that actually occur, sorted lexicographically by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeVariable {
    parts: Vec<usize>,
    tuples: Vec<Vec<u32>>,
    codes: Vec<u32>,
}

impl CompositeVariable {
    fn single(ds: &Dataset, var: usize) -> Self {
        let col = ds.column(var);
        let mut used = vec![false; ds.variable(var).len()];
        for &c in col {
            used[c as usize] = true;
        }
        let mut remap = vec![u32::MAX; used.len()];
        let mut tuples = Vec::new();
        for (i, _) in used.iter().enumerate().filter(|(_, &u)| u) {
            remap[i] = tuples.len() as u32;
            tuples.push(vec![i as u32]);
        }
        CompositeVariable {
            parts: vec![var],
            tuples,
            codes: col.iter().map(|&c| remap[c as usize]).collect(),
        }
    }

    /// The composite with one more part appended.
    pub fn extend(&self, ds: &Dataset, var: usize) -> Self {
        let width = ds.variable(var).len() as u64;
        let col = ds.column(var);
        let keys: Vec<u64> = self
            .codes
            .iter()
            .zip(col)
            .map(|(&c, &v)| c as u64 * width + v as u64)
            .collect();
        let mut distinct = keys.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let lookup: HashMap<u64, u32> = distinct
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i as u32))
            .collect();
        let tuples = distinct
            .iter()
            .map(|&k| {
                let mut t = self.tuples[(k / width) as usize].clone();
                t.push((k % width) as u32);
                t
            })
            .collect();
        let mut parts = self.parts.clone();
        parts.push(var);
        CompositeVariable {
            parts,
            tuples,
            codes: keys.iter().map(|k| lookup[k]).collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Observed value tuples, one per composite category.
    pub fn domain(&self) -> &[Vec<u32>] {
        &self.tuples
    }

    pub fn domain_size(&self) -> usize {
        self.tuples.len()
    }

    /// Composite category of each record.
    pub fn codes(&self) -> &[u32] {
        &self.codes
    }

    pub fn name(&self, ds: &Dataset) -> String {
        self.parts
            .iter()
            .map(|&p| ds.variable(p).name())
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn labels(&self, ds: &Dataset) -> Vec<String> {
        self.tuples
            .iter()
            .map(|t| {
                t.iter()
                    .zip(&self.parts)
                    .map(|(&v, &p)| ds.variable(p).label(v))
                    .collect::<Vec<_>>()
                    .join("|")
            })
            .collect()
    }

    /// Σ count² over composite cells; Ep times m².
    pub fn sum_sq_counts(&self) -> u128 {
        let mut counts = vec![0u64; self.domain_size()];
        for &c in &self.codes {
            counts[c as usize] += 1;
        }
        counts.iter().map(|&c| c as u128 * c as u128).sum()
    }
}

pub use crate::table::{ContingencyTable, JointDistribution, ProbabilityTable};
