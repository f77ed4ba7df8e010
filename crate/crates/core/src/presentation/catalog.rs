//! Built-in presentations of the nondomestic symmetric algebras of polynomial
//! growth (standard and nonstandard representatives), with explicit
//! symmetrizing forms for the two- and three-vertex pairs.
//!
//! Forms are listed on a full basis of nonzero paths, including the zeros, so
//! that they are independent of the basis the rewriting engine picks.

use thiserror::Error;

use crate::field::{Field, Fq};

use super::{parse_presentation, Presentation, PresentationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry '{0}'")]
    UnknownName(String),
    #[error("{name} requires characteristic {required}, got {got}")]
    CharacteristicMismatch {
        name: String,
        required: u64,
        got: u64,
    },
    #[error("{name} requires parameter '{param}'")]
    MissingParam { name: String, param: String },
    #[error("{name}: parameter '{param}' must not be 0 or 1")]
    ParamForbiddenValue { name: String, param: String },
    #[error("{name} takes no parameter '{param}'")]
    UnexpectedParam { name: String, param: String },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Static description of a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    /// Characteristic the algebra is defined (or symmetric) in, if restricted.
    pub characteristic: Option<u64>,
    pub needs_lambda: bool,
    pub has_form: bool,
    pub standard: bool,
    pub vertices: usize,
}

const ENTRIES: [CatalogEntry; 14] = [
    CatalogEntry {
        name: "Lambda2",
        description: "nonstandard, two vertices, tubular type (3,3,3)",
        characteristic: Some(3),
        needs_lambda: false,
        has_form: true,
        standard: false,
        vertices: 2,
    },
    CatalogEntry {
        name: "Lambda2p",
        description: "standard counterpart of Lambda2",
        characteristic: None,
        needs_lambda: false,
        has_form: true,
        standard: true,
        vertices: 2,
    },
    CatalogEntry {
        name: "Lambda3",
        description: "nonstandard, two vertices, tubular type (2,2,2,2), lambda not 0 or 1",
        characteristic: Some(2),
        needs_lambda: true,
        has_form: true,
        standard: false,
        vertices: 2,
    },
    CatalogEntry {
        name: "Lambda3p",
        description: "standard counterpart of Lambda3, lambda not 0 or 1",
        characteristic: None,
        needs_lambda: true,
        has_form: true,
        standard: true,
        vertices: 2,
    },
    CatalogEntry {
        name: "Lambda5",
        description: "nonstandard, three vertices, tubular type (2,4,4)",
        characteristic: Some(2),
        needs_lambda: false,
        has_form: true,
        standard: false,
        vertices: 3,
    },
    CatalogEntry {
        name: "Lambda5p",
        description: "standard counterpart of Lambda5",
        characteristic: None,
        needs_lambda: false,
        has_form: true,
        standard: true,
        vertices: 3,
    },
    CatalogEntry {
        name: "Lambda9",
        description:
            "nonstandard, four vertices, tubular type (3,3,3); symmetric only in characteristic 2",
        characteristic: Some(2),
        needs_lambda: false,
        has_form: false,
        standard: false,
        vertices: 4,
    },
    CatalogEntry {
        name: "Lambda9p",
        description: "standard counterpart of Lambda9 (preprojective algebra of type D4)",
        characteristic: Some(2),
        needs_lambda: false,
        has_form: false,
        standard: true,
        vertices: 4,
    },
    CatalogEntry {
        name: "A1",
        description: "standard, three vertices, tubular type (2,2,2,2), lambda not 0 or 1",
        characteristic: None,
        needs_lambda: true,
        has_form: false,
        standard: true,
        vertices: 3,
    },
    CatalogEntry {
        name: "A4",
        description: "standard, four vertices, tubular type (3,3,3)",
        characteristic: None,
        needs_lambda: false,
        has_form: false,
        standard: true,
        vertices: 4,
    },
    CatalogEntry {
        name: "T2222",
        description: "trivial extension of the canonical algebra of type (2,2,2,2,lambda)",
        characteristic: None,
        needs_lambda: true,
        has_form: false,
        standard: true,
        vertices: 6,
    },
    CatalogEntry {
        name: "T333",
        description: "trivial extension of the canonical algebra of type (3,3,3)",
        characteristic: None,
        needs_lambda: false,
        has_form: false,
        standard: true,
        vertices: 8,
    },
    CatalogEntry {
        name: "T244",
        description: "trivial extension of the canonical algebra of type (2,4,4)",
        characteristic: None,
        needs_lambda: false,
        has_form: false,
        standard: true,
        vertices: 9,
    },
    CatalogEntry {
        name: "T236",
        description: "trivial extension of the canonical algebra of type (2,3,6)",
        characteristic: None,
        needs_lambda: false,
        has_form: false,
        standard: true,
        vertices: 10,
    },
];

pub fn catalog_entries() -> &'static [CatalogEntry] {
    &ENTRIES
}

const LAMBDA2_QUIVER: &str = "\
vertices v1 v2
arrow alpha: v1 -> v1
arrow gamma: v1 -> v2
arrow beta: v2 -> v1
";

// basis: e1, a, a^2, a^3 = gb, a^4, g, ag, e2, b, ba, bag
const LAMBDA2_BASIS_ZEROS: &str = "\
form v1 = 0
form alpha = 0
form alpha.alpha = 0
form gamma = 0
form alpha.gamma = 0
form v2 = 0
form beta = 0
form beta.alpha = 0
form alpha.alpha.alpha.alpha = 1
form beta.alpha.gamma = 1
";

const LAMBDA3_QUIVER: &str = "\
vertices v1 v2
arrow alpha: v1 -> v1
arrow beta: v2 -> v2
arrow sigma: v1 -> v2
arrow gamma: v2 -> v1
";

// basis: e1, e2, a, b, s, g, a^2, as, b^2, ga, a^3, b^3
const LAMBDA3_BASIS_ZEROS: &str = "\
form v1 = 0
form v2 = 0
form alpha = 0
form beta = 0
form sigma = 0
form gamma = 0
form alpha.sigma = 0
form beta.beta = 0
form gamma.alpha = 0
form alpha.alpha.alpha = 1
form beta.beta.beta = lambda^-1
";

const LAMBDA5_QUIVER: &str = "\
vertices v1 v2 v3
arrow alpha: v2 -> v2
arrow beta: v1 -> v2
arrow gamma: v2 -> v1
arrow delta: v2 -> v3
arrow sigma: v3 -> v2
";

// basis: e1, e2, e3, a, b, g, d, s, ag, a^2 = gb, ba, a^3 = ds, sd, bag
const LAMBDA5_BASIS_ZEROS: &str = "\
form v1 = 0
form v2 = 0
form v3 = 0
form alpha = 0
form beta = 0
form gamma = 0
form delta = 0
form sigma = 0
form alpha.gamma = 0
form beta.alpha = 0
form alpha.alpha.alpha = 1
form sigma.delta = 1
form beta.alpha.gamma = 1
";

const LAMBDA9_QUIVER: &str = "\
vertices v1 v2 v3 v4
arrow alpha: v3 -> v2
arrow beta: v2 -> v3
arrow gamma: v1 -> v2
arrow delta: v2 -> v1
arrow eps: v2 -> v4
arrow xi: v4 -> v2
";

fn body(name: &str) -> Option<String> {
    let text = match name {
        "Lambda2" => format!(
            "{LAMBDA2_QUIVER}\
             rel alpha.alpha.gamma\n\
             rel beta.alpha.alpha\n\
             rel gamma.beta.gamma\n\
             rel beta.gamma.beta\n\
             rel beta.gamma = beta.alpha.gamma\n\
             rel alpha.alpha.alpha = gamma.beta\n\
             {LAMBDA2_BASIS_ZEROS}\
             form alpha.alpha.alpha = 1\n"
        ),
        "Lambda2p" => format!(
            "{LAMBDA2_QUIVER}\
             rel alpha.alpha.alpha = gamma.beta\n\
             rel beta.gamma\n\
             rel beta.alpha.alpha\n\
             rel alpha.alpha.gamma\n\
             {LAMBDA2_BASIS_ZEROS}\
             form alpha.alpha.alpha = 0\n"
        ),
        "Lambda3" => format!(
            "{LAMBDA3_QUIVER}\
             rel alpha.alpha.alpha.alpha\n\
             rel gamma.alpha.alpha\n\
             rel alpha.alpha.sigma\n\
             rel alpha.alpha = sigma.gamma + alpha.alpha.alpha\n\
             rel lambda*beta.beta = gamma.sigma\n\
             rel gamma.alpha = beta.gamma\n\
             rel sigma.beta = alpha.sigma\n\
             {LAMBDA3_BASIS_ZEROS}\
             form alpha.alpha = 1\n"
        ),
        "Lambda3p" => format!(
            "{LAMBDA3_QUIVER}\
             rel alpha.alpha = sigma.gamma\n\
             rel lambda*beta.beta = gamma.sigma\n\
             rel gamma.alpha = beta.gamma\n\
             rel sigma.beta = alpha.sigma\n\
             {LAMBDA3_BASIS_ZEROS}\
             form alpha.alpha = 0\n"
        ),
        "Lambda5" => format!(
            "{LAMBDA5_QUIVER}\
             rel alpha.alpha = gamma.beta\n\
             rel alpha.alpha.alpha = delta.sigma\n\
             rel beta.delta\n\
             rel sigma.gamma\n\
             rel alpha.delta\n\
             rel sigma.alpha\n\
             rel gamma.beta.gamma\n\
             rel beta.gamma.beta\n\
             rel beta.gamma = beta.alpha.gamma\n\
             {LAMBDA5_BASIS_ZEROS}\
             form alpha.alpha = 1\n"
        ),
        "Lambda5p" => format!(
            "{LAMBDA5_QUIVER}\
             rel alpha.alpha = gamma.beta\n\
             rel beta.delta\n\
             rel beta.gamma\n\
             rel sigma.gamma\n\
             rel alpha.delta\n\
             rel sigma.alpha\n\
             rel alpha.alpha.alpha = delta.sigma\n\
             {LAMBDA5_BASIS_ZEROS}\
             form alpha.alpha = 0\n"
        ),
        "Lambda9" => format!(
            "{LAMBDA9_QUIVER}\
             rel beta.alpha + delta.gamma + eps.xi\n\
             rel gamma.delta\n\
             rel xi.eps\n\
             rel alpha.beta.alpha\n\
             rel beta.alpha.beta\n\
             rel alpha.beta = alpha.delta.gamma.beta\n"
        ),
        "Lambda9p" => format!(
            "{LAMBDA9_QUIVER}\
             rel beta.alpha + delta.gamma + eps.xi\n\
             rel alpha.beta\n\
             rel xi.eps\n\
             rel gamma.delta\n"
        ),
        "A4" => format!(
            "{LAMBDA9_QUIVER}\
             rel beta.alpha + delta.gamma + eps.xi\n\
             rel alpha.beta\n\
             rel gamma.eps\n\
             rel xi.delta\n"
        ),
        "A1" => "\
vertices v1 v2 v3
arrow alpha: v1 -> v2
arrow gamma: v2 -> v1
arrow sigma: v2 -> v3
arrow beta: v3 -> v2
rel alpha.gamma.alpha = alpha.sigma.beta
rel beta.gamma.alpha = lambda*beta.sigma.beta
rel gamma.alpha.gamma = sigma.beta.gamma
rel gamma.alpha.sigma = lambda*sigma.beta.sigma
"
        .to_string(),
        "T2222" => "\
vertices v0 v1 a1 b1 c1 d1
arrow eta: v0 -> v1
arrow xi: v0 -> v1
arrow alpha1: v1 -> a1
arrow alpha2: a1 -> v0
arrow beta1: v1 -> b1
arrow beta2: b1 -> v0
arrow gamma1: v1 -> c1
arrow gamma2: c1 -> v0
arrow sigma1: v1 -> d1
arrow sigma2: d1 -> v0
rel alpha1.alpha2 + beta1.beta2 + gamma1.gamma2
rel alpha1.alpha2 + lambda*beta1.beta2 + sigma1.sigma2
rel eta.alpha1
rel alpha2.eta
rel xi.beta1
rel beta2.xi
rel eta.gamma1 = xi.gamma1
rel gamma2.eta = gamma2.xi
rel eta.sigma1 = lambda*xi.sigma1
rel sigma2.eta = lambda*sigma2.xi
"
        .to_string(),
        "T333" => "\
vertices v0 v1 a1 a2 b1 b2 c1 c2
arrow eta: v0 -> v1
arrow xi: v0 -> v1
arrow alpha1: v1 -> a1
arrow alpha2: a1 -> a2
arrow alpha3: a2 -> v0
arrow beta1: v1 -> b1
arrow beta2: b1 -> b2
arrow beta3: b2 -> v0
arrow gamma1: v1 -> c1
arrow gamma2: c1 -> c2
arrow gamma3: c2 -> v0
rel alpha1.alpha2.alpha3 + beta1.beta2.beta3 + gamma1.gamma2.gamma3
rel eta.alpha1
rel alpha3.eta
rel xi.beta1
rel beta3.xi
rel eta.gamma1 = xi.gamma1
rel gamma3.eta = gamma3.xi
rel alpha2.alpha3.xi.alpha1.alpha2
rel beta2.beta3.eta.beta1.beta2
rel gamma2.gamma3.eta.gamma1.gamma2
"
        .to_string(),
        "T244" => "\
vertices v0 v1 a1 b1 b2 b3 c1 c2 c3
arrow eta: v0 -> v1
arrow xi: v0 -> v1
arrow alpha1: v1 -> a1
arrow alpha2: a1 -> v0
arrow beta1: v1 -> b1
arrow beta2: b1 -> b2
arrow beta3: b2 -> b3
arrow beta4: b3 -> v0
arrow gamma1: v1 -> c1
arrow gamma2: c1 -> c2
arrow gamma3: c2 -> c3
arrow gamma4: c3 -> v0
rel alpha1.alpha2 + beta1.beta2.beta3.beta4 + gamma1.gamma2.gamma3.gamma4
rel eta.alpha1
rel alpha2.eta
rel xi.beta1
rel beta4.xi
rel eta.gamma1 = xi.gamma1
rel gamma4.eta = gamma4.xi
rel beta2.beta3.beta4.eta.beta1.beta2
rel beta3.beta4.eta.beta1.beta2.beta3
rel gamma2.gamma3.gamma4.eta.gamma1.gamma2
rel gamma3.gamma4.eta.gamma1.gamma2.gamma3
"
        .to_string(),
        "T236" => "\
vertices v0 v1 a1 b1 b2 c1 c2 c3 c4 c5
arrow eta: v0 -> v1
arrow xi: v0 -> v1
arrow alpha1: v1 -> a1
arrow alpha2: a1 -> v0
arrow beta1: v1 -> b1
arrow beta2: b1 -> b2
arrow beta3: b2 -> v0
arrow gamma1: v1 -> c1
arrow gamma2: c1 -> c2
arrow gamma3: c2 -> c3
arrow gamma4: c3 -> c4
arrow gamma5: c4 -> c5
arrow gamma6: c5 -> v0
rel alpha1.alpha2 + beta1.beta2.beta3 + gamma1.gamma2.gamma3.gamma4.gamma5.gamma6
rel eta.alpha1
rel alpha2.eta
rel xi.beta1
rel beta3.xi
rel eta.gamma1 = xi.gamma1
rel gamma6.eta = gamma6.xi
rel beta2.beta3.eta.beta1.beta2
rel gamma2.gamma3.gamma4.gamma5.gamma6.eta.gamma1.gamma2
rel gamma3.gamma4.gamma5.gamma6.eta.gamma1.gamma2.gamma3
rel gamma4.gamma5.gamma6.eta.gamma1.gamma2.gamma3.gamma4
rel gamma5.gamma6.eta.gamma1.gamma2.gamma3.gamma4.gamma5
"
        .to_string(),
        _ => return None,
    };
    Some(text)
}

/// DSL source of a catalog entry over `field` (the `lambda` value, if any,
/// is substituted as a `param` line).
pub fn catalog_source(
    name: &str,
    field: &Field,
    lambda: Option<Fq>,
) -> Result<String, CatalogError> {
    let body = body(name).ok_or_else(|| CatalogError::UnknownName(name.to_string()))?;
    let mut text = format!("name {name}\nfield {} {}\n", field.p(), field.k());
    if let Some(l) = lambda {
        text.push_str(&format!("param lambda = {}\n", field.format(l)));
    }
    text.push_str(&body);
    Ok(text)
}

/// Looks up a catalog presentation over `field` with the given parameters.
pub fn catalog_lookup(
    name: &str,
    field: &Field,
    params: &[(String, Fq)],
) -> Result<Presentation, CatalogError> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))?;
    if let Some(required) = entry.characteristic {
        if field.p() != required {
            return Err(CatalogError::CharacteristicMismatch {
                name: name.to_string(),
                required,
                got: field.p(),
            });
        }
    }
    let mut lambda = None;
    for (param, value) in params {
        if param != "lambda" || !entry.needs_lambda {
            return Err(CatalogError::UnexpectedParam {
                name: name.to_string(),
                param: param.clone(),
            });
        }
        lambda = Some(*value);
    }
    if entry.needs_lambda {
        let l = lambda.ok_or_else(|| CatalogError::MissingParam {
            name: name.to_string(),
            param: "lambda".to_string(),
        })?;
        if l == Fq::ZERO || l == Fq::ONE || !field.contains(l) {
            return Err(CatalogError::ParamForbiddenValue {
                name: name.to_string(),
                param: "lambda".to_string(),
            });
        }
    }
    let text = catalog_source(name, field, lambda)?;
    Ok(parse_presentation(&text)?)
}
