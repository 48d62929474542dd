//! C ABI for coxeterkit.
//!
//! Every fallible function returns a [`CkStatus`]; on failure a message is
//! available from [`ck_last_error`] until the next call on the same thread.
//! Handles are opaque and must be released with their `_free` function.
//! Strings returned as `char *` are owned by the caller and released with
//! [`ck_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use coxeterkit::classify::{self, ClassificationResult, ComponentKind, TypeLabel};
use coxeterkit::coxeter::{CoxeterGraph, Label};
use coxeterkit::family;
use coxeterkit::rep::{format_value, CharacterTable};
use coxeterkit::Error;

/// Status codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed graph, type label or index.
    InvalidInput = 3,
    /// The type is valid but not covered (e.g. exceptional character tables).
    Unsupported = 4,
    /// A size guard was hit.
    TooLarge = 5,
    Internal = 6,
    Panic = 7,
}

/// A Coxeter graph.
pub struct CkGraph(CoxeterGraph);

/// The classification of a graph.
pub struct CkClassification(ClassificationResult);

/// An exact character table.
pub struct CkCharTable(CharacterTable);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> CkStatus {
    match e {
        Error::UnsupportedType(_) => CkStatus::Unsupported,
        Error::OrderTooLarge { .. } | Error::OutOfRange { .. } => CkStatus::TooLarge,
        Error::Inconsistent(_) | Error::RelationFailure(_) | Error::IncompleteBasis { .. } => CkStatus::Internal,
        _ => CkStatus::InvalidInput,
    }
}

struct Fail(CkStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> CkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CkStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside coxeterkit");
            CkStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(CkStatus::NullPointer, "null handle".into()))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(CkStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|e| Fail(CkStatus::InvalidUtf8, e.to_string()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(CkStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

fn parse_type(s: &str) -> Result<TypeLabel, Fail> {
    s.parse::<TypeLabel>().map_err(Fail::from)
}

/// Message for the last failed call on this thread; empty if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ck_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn ck_status_name(status: CkStatus) -> *const c_char {
    let s: &'static CStr = match status {
        CkStatus::Ok => c"ok",
        CkStatus::NullPointer => c"null pointer",
        CkStatus::InvalidUtf8 => c"invalid utf-8",
        CkStatus::InvalidInput => c"invalid input",
        CkStatus::Unsupported => c"unsupported type",
        CkStatus::TooLarge => c"size guard exceeded",
        CkStatus::Internal => c"internal error",
        CkStatus::Panic => c"panic",
    };
    s.as_ptr()
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn ck_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- graphs ----

/// A graph on `n` vertices with no edges (all labels 2).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_new(n: usize, out: *mut *mut CkGraph) -> CkStatus {
    guard(|| write_out(out, Box::into_raw(Box::new(CkGraph(CoxeterGraph::new(n))))))
}

/// Parses `{"n": .., "edges": [[i, j, m], ..]}` where `m = 0` means ∞.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_from_json(json: *const c_char, out: *mut *mut CkGraph) -> CkStatus {
    guard(|| {
        let g = CoxeterGraph::from_json(read_str(json)?)?;
        write_out(out, Box::into_raw(Box::new(CkGraph(g))))
    })
}

/// The graph of a finite type, e.g. `"E8"` or `"I2(7)"`.
///
/// # Safety
/// `type_label` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_from_type(type_label: *const c_char, out: *mut *mut CkGraph) -> CkStatus {
    guard(|| {
        let g = classify::catalog_graph(parse_type(read_str(type_label)?)?)?;
        write_out(out, Box::into_raw(Box::new(CkGraph(g))))
    })
}

/// Sets the label of edge `{i, j}`; `m = 2` removes it, `m = 0` means ∞.
///
/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_set_label(graph: *mut CkGraph, i: usize, j: usize, m: u32) -> CkStatus {
    guard(|| {
        let g = graph.as_mut().ok_or_else(|| Fail(CkStatus::NullPointer, "null handle".into()))?;
        g.0.set_label(i, j, Label::from_code(m))?;
        Ok(())
    })
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_rank(graph: *const CkGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.rank())
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_to_json(graph: *const CkGraph) -> *mut c_char {
    match graph.as_ref() {
        Some(g) => owned_string(g.0.to_json()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `graph` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ck_graph_free(graph: *mut CkGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

// ---- classification ----

/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ck_classify(graph: *const CkGraph, out: *mut *mut CkClassification) -> CkStatus {
    guard(|| {
        let r = classify::classify(&borrow(graph)?.0)?;
        write_out(out, Box::into_raw(Box::new(CkClassification(r))))
    })
}

/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_classification_is_finite(c: *const CkClassification) -> bool {
    c.as_ref().is_some_and(|c| c.0.is_finite())
}

/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_classification_component_count(c: *const CkClassification) -> usize {
    c.as_ref().map_or(0, |c| c.0.components.len())
}

/// Type label of component `k` (`"A4"`, …) or `NotFinite (<witness>)`.
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_classification_component(c: *const CkClassification, k: usize) -> *mut c_char {
    match c.as_ref().and_then(|c| c.0.components.get(k)) {
        Some(comp) => owned_string(match &comp.kind {
            ComponentKind::Finite(t) => t.to_string(),
            ComponentKind::NotFinite(w) => format!("NotFinite ({w})"),
        }),
        None => ptr::null_mut(),
    }
}

/// Whole result, components joined by `" + "`.
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_classification_to_string(c: *const CkClassification) -> *mut c_char {
    match c.as_ref() {
        Some(c) => owned_string(c.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `c` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ck_classification_free(c: *mut CkClassification) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// `|W|` for `A_n`, `B_n`, `D_n` and `I2(m)`.
///
/// # Safety
/// `type_label` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ck_group_order(type_label: *const c_char, out: *mut u64) -> CkStatus {
    guard(|| {
        let order = classify::coxeter_group_order(parse_type(read_str(type_label)?)?)?;
        let order = u64::try_from(order).map_err(|_| Fail(CkStatus::TooLarge, "order exceeds 64 bits".into()))?;
        write_out(out, order)
    })
}

// ---- character tables ----

/// Exact character table of `A_n`, `B_n`, `D_n` or `I2(m)` within the guards.
///
/// # Safety
/// `type_label` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ck_chartable_new(type_label: *const c_char, out: *mut *mut CkCharTable) -> CkStatus {
    guard(|| {
        let table = family::character_table(parse_type(read_str(type_label)?)?)?;
        write_out(out, Box::into_raw(Box::new(CkCharTable(table))))
    })
}

/// Number of irreducible characters (= number of classes).
///
/// # Safety
/// `t` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_chartable_size(t: *const CkCharTable) -> usize {
    t.as_ref().map_or(0, |t| t.0.characters.len())
}

/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ck_chartable_class_size(t: *const CkCharTable, class: usize, out: *mut usize) -> CkStatus {
    guard(|| {
        let cd = borrow(t)?.0.group.classes();
        if class >= cd.count() {
            return Err(Fail(CkStatus::InvalidInput, format!("class {class} out of range")));
        }
        write_out(out, cd.size(class))
    })
}

/// # Safety
/// `t` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_chartable_label(t: *const CkCharTable, row: usize) -> *mut c_char {
    match t.as_ref().and_then(|t| t.0.labels.get(row)) {
        Some(l) => owned_string(l.clone()),
        None => ptr::null_mut(),
    }
}

/// `χ_row(class)` as a complex double.
///
/// # Safety
/// `t` must be a live handle; `re` and `im` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ck_chartable_value(
    t: *const CkCharTable,
    row: usize,
    class: usize,
    re: *mut f64,
    im: *mut f64,
) -> CkStatus {
    guard(|| {
        let v = cell(borrow(t)?, row, class)?;
        write_out(re, v.to_f64())?;
        write_out(im, v.imag_f64())
    })
}

/// `χ_row(class)` in exact form, e.g. `"-1"` or `"z5^2+z5^3"`.
///
/// # Safety
/// `t` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_chartable_value_exact(t: *const CkCharTable, row: usize, class: usize) -> *mut c_char {
    match t.as_ref().map(|t| cell(t, row, class)) {
        Some(Ok(v)) => owned_string(format_value(v, false)),
        Some(Err(Fail(_, msg))) => {
            set_error(&msg);
            ptr::null_mut()
        }
        None => ptr::null_mut(),
    }
}

/// The whole table as TSV (see the CLI `chartable` command).
///
/// # Safety
/// `t` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ck_chartable_to_tsv(t: *const CkCharTable, float: bool) -> *mut c_char {
    match t.as_ref() {
        Some(t) => owned_string(t.0.to_tsv(float)),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `t` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ck_chartable_free(t: *mut CkCharTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

fn cell(t: &CkCharTable, row: usize, class: usize) -> Result<&coxeterkit::arith::Cyclotomic, Fail> {
    let chi = t.0.characters.get(row).ok_or_else(|| Fail(CkStatus::InvalidInput, format!("row {row} out of range")))?;
    chi.values()
        .get(class)
        .ok_or_else(|| Fail(CkStatus::InvalidInput, format!("class {class} out of range")))
}
