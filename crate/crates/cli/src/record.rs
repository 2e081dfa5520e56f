//! The wire format for admissible elements: a flat record with the
//! redundant derived fields spelled out, serialized as JSON or CSV with a
//! fixed field order and integers only.

use serde::{Deserialize, Serialize};

use kr_strata::AdmissibleElement;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub g: usize,
    pub x0: Vec<i64>,
    pub w: Vec<usize>,
    pub u: Vec<u8>,
    pub sigma: Vec<usize>,
    pub length: usize,
    pub prank: usize,
    pub fixed: Vec<usize>,
    pub cycles: Vec<Vec<usize>>,
    pub kernels: Vec<String>,
    pub possibly_maximal: bool,
}

impl ElementRecord {
    pub fn from_admissible(x: &AdmissibleElement) -> Self {
        Self {
            g: x.genus(),
            x0: x.x0().coords().to_vec(),
            w: x.weyl().one_line().to_vec(),
            u: x.sign_vector().bits().to_vec(),
            sigma: x.small_permutation().one_line().to_vec(),
            length: x.length(),
            prank: x.p_rank(),
            fixed: x.fixed_points().to_vec(),
            cycles: x.cycles().iter().map(|z| z.elements().to_vec()).collect(),
            kernels: x.kernel_types().iter().map(|k| k.to_string()).collect(),
            possibly_maximal: x.is_possibly_maximal(),
        }
    }

    pub const CSV_HEADER: &'static str =
        "g,x0,w,u,sigma,length,prank,fixed,cycles,kernels,possibly_maximal";

    /// One CSV row; vector fields are encoded without commas (bit-strings
    /// for x0 and u, space-joined integers, cycle notation, keywords).
    pub fn csv_row(&self) -> String {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let bits_i64 = self
            .x0
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join("");
        let bits_u8 = self
            .u
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join("");
        let cycles = self
            .cycles
            .iter()
            .map(|z| format!("({})", join(z)))
            .collect::<Vec<_>>()
            .join("");
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.g,
            bits_i64,
            join(&self.w),
            bits_u8,
            join(&self.sigma),
            self.length,
            self.prank,
            join(&self.fixed),
            cycles,
            self.kernels.join(" "),
            self.possibly_maximal,
        )
    }
}
