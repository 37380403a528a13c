//! C ABI over the `pos-groups` library.
//!
//! Groups live behind an opaque [`PosGroup`] handle. Every fallible call
//! returns a [`PosStatus`] and writes its result through an out-pointer;
//! on failure a message is available from [`pos_last_error`] until the next
//! call on the same thread. Strings handed out are NUL-terminated UTF-8 and
//! must be released with [`pos_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use pos_groups::cli::{self, Built, GroupSpec, OutputDocument};
use pos_groups::groups::{EnumerationBudget, Group};
use pos_groups::Error;

/// Result code of every fallible call.
///
/// `NotPos` is a success code: the call worked and the answer is "no".
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosStatus {
    Ok = 0,
    NotPos = 1,
    InvalidInput = 2,
    BudgetExceeded = 3,
    HypothesisViolated = 4,
    NullPointer = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

/// Opaque group handle.
pub struct PosGroup {
    spec: GroupSpec,
    built: Built,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("NULs removed"));
}

fn from_error(err: &Error) -> PosStatus {
    set_error(err.to_string());
    match cli::exit_code(err) {
        3 => PosStatus::BudgetExceeded,
        4 => PosStatus::HypothesisViolated,
        _ => PosStatus::InvalidInput,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<PosStatus, PosStatus>) -> PosStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) | Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            PosStatus::Panic
        }
    }
}

fn lift<T>(r: pos_groups::Result<T>) -> Result<T, PosStatus> {
    r.map_err(|e| from_error(&e))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, PosStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(PosStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        PosStatus::InvalidUtf8
    })
}

unsafe fn group_ref<'a>(g: *const PosGroup) -> Result<&'a PosGroup, PosStatus> {
    g.as_ref().ok_or_else(|| {
        set_error("null group handle");
        PosStatus::NullPointer
    })
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), PosStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(PosStatus::NullPointer);
    }
    *out = CString::new(s)
        .expect("documents contain no NUL")
        .into_raw();
    Ok(())
}

unsafe fn write_document(
    out: *mut *mut c_char,
    doc: &OutputDocument,
) -> Result<PosStatus, PosStatus> {
    write_string(out, doc.to_json())?;
    Ok(PosStatus::Ok)
}

/// Parses a group spec such as `"c6c7"` or `"thm32:5,2,1"` and builds the group.
///
/// `budget` caps generator closures for `perm:` specs. On success `*out`
/// owns a handle to release with [`pos_group_free`].
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pos_group_new(
    spec: *const c_char,
    budget: u64,
    out: *mut *mut PosGroup,
) -> PosStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return Err(PosStatus::NullPointer);
        }
        let spec: GroupSpec = lift(read_str(spec)?.parse())?;
        let built = lift(cli::build(&spec, EnumerationBudget::new(budget)))?;
        *out = Box::into_raw(Box::new(PosGroup { spec, built }));
        Ok(PosStatus::Ok)
    })
}

/// Releases a handle from [`pos_group_new`]. Null is ignored.
///
/// # Safety
/// `group` must come from [`pos_group_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pos_group_free(group: *mut PosGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Group order as a decimal string.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pos_group_order(
    group: *const PosGroup,
    out: *mut *mut c_char,
) -> PosStatus {
    guard(|| {
        let g = group_ref(group)?;
        write_string(out, g.built.group.cardinality().to_string())?;
        Ok(PosStatus::Ok)
    })
}

/// Spectrum document as JSON.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pos_group_spectrum_json(
    group: *const PosGroup,
    budget: u64,
    out: *mut *mut c_char,
) -> PosStatus {
    guard(|| {
        let g = group_ref(group)?;
        let doc = lift(cli::built_spectrum_document(
            &g.spec,
            &g.built,
            EnumerationBudget::new(budget),
        ))?;
        write_document(out, &doc)
    })
}

/// POS report as JSON. Returns `Ok` or `NotPos` according to the verdict.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pos_group_check_json(
    group: *const PosGroup,
    budget: u64,
    out: *mut *mut c_char,
) -> PosStatus {
    guard(|| {
        let g = group_ref(group)?;
        let doc = lift(cli::pos_report_document(
            &g.spec,
            &g.built,
            EnumerationBudget::new(budget),
        ))?;
        write_document(out, &doc)?;
        Ok(verdict(&doc))
    })
}

/// POS verdict only: `Ok` for a POS-group, `NotPos` otherwise.
///
/// # Safety
/// `group` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pos_group_is_pos(group: *const PosGroup, budget: u64) -> PosStatus {
    guard(|| {
        let g = group_ref(group)?;
        let doc = lift(cli::pos_report_document(
            &g.spec,
            &g.built,
            EnumerationBudget::new(budget),
        ))?;
        Ok(verdict(&doc))
    })
}

fn verdict(doc: &OutputDocument) -> PosStatus {
    if cli::document_status(doc) == 0 {
        PosStatus::Ok
    } else {
        PosStatus::NotPos
    }
}

/// Non-POS witness for `A_n` as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pos_witness_json(n: u64, out: *mut *mut c_char) -> PosStatus {
    guard(|| write_document(out, &lift(cli::witness_document(n))?))
}

/// Feasibility report for one order as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pos_feasibility_json(n: u64, out: *mut *mut c_char) -> PosStatus {
    guard(|| write_document(out, &lift(cli::feasibility_document(n))?))
}

/// Feasible orders in `min..=max` as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pos_scan_json(min: u64, max: u64, out: *mut *mut c_char) -> PosStatus {
    guard(|| write_document(out, &lift(cli::scan_document(min, max))?))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pos_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or an empty string.
///
/// The pointer stays valid until the next call into this library on the
/// same thread. Do not free it.
#[no_mangle]
pub extern "C" fn pos_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
