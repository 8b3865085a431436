use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{Expr, Side};
use crate::hypotheses::PartitionSpec;
use crate::interval::Interval;

macro_rules! cases {
    ($($variant:ident => $name:literal, $statement:literal;)*) => {
        /// Identifier of a catalog inequality.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        pub enum CaseId {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl CaseId {
            pub const ALL: &'static [CaseId] = &[$(CaseId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CaseId::$variant => $name,)*
                }
            }

            /// The inequality in plain text.
            pub fn statement(self) -> &'static str {
                match self {
                    $(CaseId::$variant => $statement,)*
                }
            }
        }

        impl FromStr for CaseId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(CaseId::$variant),)*
                    _ => Err(Error::UnknownCase(s.to_owned())),
                }
            }
        }
    };
}

cases! {
    QiOriginal => "qi_original",
        "(int f)^(n+1) <= int f^(n+2)";
    Prop1General => "prop1_general",
        "(b-a) K M^n prod m_i^(n-i) + (int f^alpha g prod h_i)^n <= int f^(n+1) g^n prod h_i^(n-i)";
    CorFghp => "cor_fghp",
        "(b-a) K M^n h^(n-1)(a) p^(n-nu)(b) + (int f^alpha g h p)^n <= int f^(n+1) g^n h^(n-1) p^(n-nu)";
    CorFg1 => "cor_fg1",
        "(b-a) K g^n(a) + (n+1-alpha) A/n! (int f^alpha g)^n <= int f^(n+1) g^n";
    CorFg2 => "cor_fg2",
        "(b-a) K g^n(a) f^(n-1)(a)^(n-1) + (n+1-alpha) C^(n(1-alpha))/n! (int f^alpha g f^(n-1))^n <= int f^(n+1) g^n (f^(n-1))^(n-1)";
    CorFh => "cor_fh",
        "(b-a) K h^(n-1)(a)/f^(n-1)(a) + (n+1-alpha) C^(n(1-alpha))/n! (int f^alpha h)^n <= int f^(n+1) h^(n-1)/f^(n-1)";
    CorFg3 => "cor_fg3",
        "(b-a) L g^n(a) f^(n-1)(a)^(n-1) + (n+1-alpha)/n! (int f^beta g f^(n-1))^n <= int f^(n beta+1) g^n (f^(n-1))^(n-1)";
    Prop2GOverF => "prop2_g_over_f",
        "(b-a) f^(n+1)(a) g^(n+1)(a) h(a)/f(b) + (int g/f)^(n+1) <= int f^n g^(n+1) h";
    CorGOverF => "cor_g_over_f",
        "(b-a) g^(n+1)(a)/f(b) + f'(a)^n (n+1)^(n-1)/n! (int g/f)^(n+1) <= int f^n g^(n+1) / f^(n+1)(a)";
    CorLimitScan => "cor_limit_scan",
        "int g/f <= S_n c_n / (f(a) f'(a)^(n/(n+1))) and S_n <= (b-a)^(1/(n+1)) f(b)^(n/(n+1)) g(b), S_n = (int f^n g^(n+1))^(1/(n+1))";
    Lemma1OverE => "lemma_1_over_e",
        "int g/f <= g(b)/f'(a) log(f(b)/f(a)) <= f(b) g(b) / (e f(a) f'(a))";
    LemmaExp => "lemma_exp",
        "x^e <= e^x, equality iff x = e";
    CorLog1 => "cor_log1",
        "log(f(b)/f(a))^(n+1) + n!(b-a)/(n+1)^(n-1) f'(a)/f(b) <= n!/(n+1)^n (f'(b)/f'(a))^n (f^(n+1)(b)/f^(n+1)(a) - 1)";
    CorLog2 => "cor_log2",
        "(1 - f(a)/f(b))^(n+1) <= n!/(n+1)^(n-1) ((f'(b)/f'(a))^n log(f(b)/f(a)) - (b-a) f'(a)/f(b))";
    CorLog3 => "cor_log3",
        "1 - f(a)/f(b) <= f'(b) f(a)/(f(b) f'(a)) log(f(b)/f(a)) <= f'(b)/(e f'(a))";
    PropAlpha1 => "prop_alpha1",
        "(b-a) f^n(a) g^alpha(a) + (int f g)^n <= int f^n g^alpha, alpha > n";
    CorAlpha1 => "cor_alpha1",
        "(b-a) f^n(a) + (n-1)/(n! A) (int f)^n <= int f^n, A = sup f/f^(n-1)";
    PropAlpha2 => "prop_alpha2",
        "(b-a) f^n(a) K + (int f g)^n <= int f^n g^alpha, alpha <= n";
    PropFgh => "prop_fgh",
        "(b-a) f^n(a) g^l(a) + (int f g h)^n <= int f^n g^l";
    CorFgh1 => "cor_fgh1",
        "(b-a) f^n(a) g(a) + (int f)^n <= int f^n g";
    CorFgh2 => "cor_fgh2",
        "(b-a) f^(n+1)(a)/f^(n-1)(a) + (n-1)/n! (int f)^n <= int f^(n+1)/f^(n-1)";
    PropXMinusA => "prop_x_minus_a",
        "(b-a) f^(n+1)(a) g^n(a) h^(n-1)(a) + (int f g h)^n <= int f^(n+1) g^n h^(n-1)";
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Integer and real parameters; which ones are required depends on the case.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(rename = "partition_I", default, skip_serializing_if = "Option::is_none")]
    pub partition_i: Option<Vec<usize>>,
}

/// One instantiation of a catalog inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseInstance {
    pub case_id: CaseId,
    #[serde(flatten)]
    pub interval: Interval,
    #[serde(flatten)]
    pub params: Params,
    #[serde(default)]
    pub side: Side,
    pub functions: BTreeMap<String, Expr>,
}

/// Largest `n` accepted; factorials and jet orders stay well inside f64 range.
pub const MAX_N: u32 = 60;

impl CaseInstance {
    pub fn new(case_id: CaseId, interval: Interval) -> Self {
        CaseInstance { case_id, interval, params: Params::default(), side: Side::Right, functions: BTreeMap::new() }
    }

    pub fn with_n(mut self, n: u32) -> Self {
        self.params.n = Some(n);
        self
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.params.alpha = Some(alpha);
        self
    }

    pub fn with_nu(mut self, nu: u32) -> Self {
        self.params.nu = Some(nu);
        self
    }

    pub fn with_l(mut self, l: u32) -> Self {
        self.params.l = Some(l);
        self
    }

    pub fn with_k(mut self, k: u32) -> Self {
        self.params.k = Some(k);
        self
    }

    pub fn with_partition(mut self, i: impl IntoIterator<Item = usize>) -> Self {
        self.params.partition_i = Some(i.into_iter().collect());
        self
    }

    pub fn with_fn(mut self, slot: &str, expr: Expr) -> Self {
        self.functions.insert(slot.to_owned(), expr);
        self
    }

    pub fn slot(&self, name: &str) -> Result<&Expr> {
        self.functions.get(name).ok_or_else(|| Error::MissingSlot(name.to_owned()))
    }

    /// Function slots this case reads.
    pub fn required_slots(&self) -> Vec<String> {
        use CaseId::*;
        let names: &[&str] = match self.case_id {
            QiOriginal | CorLog1 | CorLog2 | CorLog3 | CorAlpha1 | CorFgh2 => &["f"],
            CorFg1 | CorFg2 | CorFg3 | CorGOverF | CorLimitScan | Lemma1OverE | PropAlpha1 | PropAlpha2
            | CorFgh1 => &["f", "g"],
            CorFh => &["f", "h"],
            Prop2GOverF | PropFgh | PropXMinusA => &["f", "g", "h"],
            CorFghp => &["f", "g", "h", "p"],
            LemmaExp => &[],
            Prop1General => {
                let n = self.params.n.unwrap_or(0) as usize;
                let mut v = vec!["f".to_owned(), "g".to_owned()];
                v.extend((1..=n).map(|i| format!("h_{i}")));
                return v;
            }
        };
        names.iter().map(|s| s.to_string()).collect()
    }

    pub fn n(&self) -> Result<u32> {
        self.params.n.ok_or_else(|| Error::InvalidParams(format!("{} needs n", self.case_id)))
    }

    pub fn alpha(&self) -> Result<f64> {
        self.params.alpha.ok_or_else(|| Error::InvalidParams(format!("{} needs alpha", self.case_id)))
    }

    fn int_param(&self, v: Option<u32>, name: &str) -> Result<u32> {
        v.ok_or_else(|| Error::InvalidParams(format!("{} needs {name}", self.case_id)))
    }

    pub fn nu(&self) -> Result<u32> {
        self.int_param(self.params.nu, "nu")
    }

    pub fn l(&self) -> Result<u32> {
        self.int_param(self.params.l, "l")
    }

    pub fn k(&self) -> Result<u32> {
        self.int_param(self.params.k, "k")
    }

    pub fn partition(&self) -> Result<PartitionSpec> {
        let i = self
            .params
            .partition_i
            .as_ref()
            .ok_or_else(|| Error::InvalidParams(format!("{} needs partition_I", self.case_id)))?;
        PartitionSpec::new(self.n()? as usize, i.iter().copied())
    }

    /// The weights `h_1, ..., h_n` of the general case.
    pub fn weights(&self) -> Result<Vec<Expr>> {
        (1..=self.n()?).map(|i| self.slot(&format!("h_{i}")).cloned()).collect()
    }

    /// Checks parameter domains and slot bindings.
    pub fn validate(&self) -> Result<()> {
        use CaseId::*;
        let id = self.case_id;
        let bad = |msg: String| Err(Error::InvalidParams(format!("{id}: {msg}")));

        let n_min = match id {
            Lemma1OverE | LemmaExp | CorLog3 => None,
            QiOriginal | Prop2GOverF | CorGOverF | CorLimitScan | CorLog1 | CorLog2 => Some(1),
            _ => Some(2),
        };
        if let Some(n_min) = n_min {
            let n = self.n()?;
            if n < n_min || n > MAX_N {
                return bad(format!("n must lie in {n_min}..={MAX_N}, got {n}"));
            }
        }

        let alpha_cap = match id {
            Prop1General | CorFghp | CorFg1 | CorFg2 | CorFh => {
                let n = self.n()? as f64;
                Some((n / (n - 1.0), true))
            }
            CorFg3 => Some((1.0, true)),
            PropAlpha2 => Some((self.n()? as f64, true)),
            PropAlpha1 => Some((self.n()? as f64, false)),
            _ => None,
        };
        if let Some((bound, upper)) = alpha_cap {
            let alpha = self.alpha()?;
            if !alpha.is_finite() {
                return bad(format!("alpha must be finite, got {alpha}"));
            }
            if upper && alpha > bound {
                return bad(format!("alpha must be <= {bound}, got {alpha}"));
            }
            if !upper && alpha <= bound {
                return bad(format!("alpha must be > {bound}, got {alpha}"));
            }
        }

        match id {
            CorFghp => {
                let (n, nu) = (self.n()?, self.nu()?);
                if !(2..=n).contains(&nu) {
                    return bad(format!("nu must lie in 2..={n}, got {nu}"));
                }
            }
            PropFgh => {
                let (n, l) = (self.n()?, self.l()?);
                if !(1..=n).contains(&l) {
                    return bad(format!("l must lie in 1..={n}, got {l}"));
                }
            }
            PropXMinusA => {
                let (n, k) = (self.n()?, self.k()?);
                if !(1..n).contains(&k) {
                    return bad(format!("k must lie in 1..={}, got {k}", n - 1));
                }
            }
            Prop1General => {
                self.partition()?;
            }
            LemmaExp => {
                if !self.interval.is_degenerate() || self.interval.a() <= 0.0 {
                    return bad(format!(
                        "the point x is given as a = b > 0, got {}",
                        self.interval
                    ));
                }
            }
            _ => {}
        }

        for slot in self.required_slots() {
            self.slot(&slot)?;
        }
        Ok(())
    }
}
