//! C interface to `treepack`.
//!
//! Graphs live behind an opaque [`TreepackGraph`] handle created by one of the
//! constructors and released with [`treepack_graph_free`]. Every fallible
//! call returns a [`TreepackStatus`]; on failure a message is available from
//! [`treepack_last_error_message`] on the same thread until the next call.
//! Results are written through out-pointers. String results use a
//! caller-supplied buffer: the required size including the terminating NUL
//! is always stored in `needed`, and `TREEPACK_STATUS_BUFFER_TOO_SMALL` is
//! returned when `capacity` is short.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use treepack::extremal::{book_graph, complete_graph, join_candidate};
use treepack::graph::{edge_connectivity, parse_edge_list, parse_graph6, write_graph6};
use treepack::packing::{arboricity, stp_number};
use treepack::spectral::{spanning_tree_count, spectral_radius};
use treepack::verify::{check_edge_theorem, check_spectral_theorem, Verdict};
use treepack::{Error, Graph};

/// Opaque graph handle.
pub struct TreepackGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreepackStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    Disconnected = 5,
    BufferTooSmall = 6,
    LimitExceeded = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreepackVerdict {
    Consistent = 0,
    Indeterminate = 2,
    Counterexample = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

struct Failure(TreepackStatus, String);

fn status_of(e: &Error) -> TreepackStatus {
    match e {
        Error::Graph6 { .. } | Error::EdgeList { .. } => TreepackStatus::ParseError,
        Error::Disconnected => TreepackStatus::Disconnected,
        Error::LimitExceeded { .. } => TreepackStatus::LimitExceeded,
        _ => TreepackStatus::InvalidArgument,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> TreepackStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TreepackStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            TreepackStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(TreepackStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const TreepackGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn text_arg<'a>(text: *const c_char) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(null("text"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| Failure(TreepackStatus::InvalidUtf8, e.to_string()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_graph(out: *mut *mut TreepackGraph, g: Graph) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(TreepackGraph { inner: g })));
    Ok(())
}

unsafe fn put_string(text: &str, buffer: *mut c_char, capacity: usize, needed: *mut usize) -> Result<(), Failure> {
    let bytes = text.as_bytes();
    put(needed, bytes.len() + 1)?;
    if capacity < bytes.len() + 1 {
        return Err(Failure(
            TreepackStatus::BufferTooSmall,
            format!("buffer holds {capacity} bytes, {} needed", bytes.len() + 1),
        ));
    }
    if buffer.is_null() {
        return Err(null("buffer"));
    }
    ptr::copy_nonoverlapping(bytes.as_ptr(), buffer.cast::<u8>(), bytes.len());
    *buffer.add(bytes.len()) = 0;
    Ok(())
}

fn verdict_code(v: Verdict) -> TreepackVerdict {
    match v {
        Verdict::Consistent => TreepackVerdict::Consistent,
        Verdict::Indeterminate => TreepackVerdict::Indeterminate,
        Verdict::Counterexample => TreepackVerdict::Counterexample,
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn treepack_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn treepack_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn treepack_graph_from_graph6(text: *const c_char, out: *mut *mut TreepackGraph) -> TreepackStatus {
    guard(|| {
        let g = parse_graph6(text_arg(text)?.trim())?;
        put_graph(out, g)
    })
}

/// Parses the `n m` header plus `u v` lines edge-list format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn treepack_graph_from_edge_list(text: *const c_char, out: *mut *mut TreepackGraph) -> TreepackStatus {
    guard(|| {
        let g = parse_edge_list(text_arg(text)?)?;
        put_graph(out, g)
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `pairs` (`2 * edge_count` entries). Duplicate pairs collapse.
///
/// # Safety
/// `pairs` must point to `2 * edge_count` readable values (may be null when
/// `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_graph_from_edges(
    n: usize,
    pairs: *const usize,
    edge_count: usize,
    out: *mut *mut TreepackGraph,
) -> TreepackStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null("pairs"));
        } else {
            std::slice::from_raw_parts(pairs, 2 * edge_count)
        };
        let g = Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        put_graph(out, g)
    })
}

/// `K_n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_complete_graph(n: usize, out: *mut *mut TreepackGraph) -> TreepackStatus {
    guard(|| put_graph(out, complete_graph(n)?))
}

/// Two cliques `K_{delta+1}` and `K_{n-delta-1}` with `i` cross edges from
/// one hub vertex.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_book_graph(n: usize, delta: usize, i: usize, out: *mut *mut TreepackGraph) -> TreepackStatus {
    guard(|| put_graph(out, book_graph(n, delta, i)?))
}

/// `K_k` joined to `K_k` plus `n - 2k` isolated vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_join_candidate(n: usize, k: usize, out: *mut *mut TreepackGraph) -> TreepackStatus {
    guard(|| put_graph(out, join_candidate(n, k)?))
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn treepack_graph_free(g: *mut TreepackGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_graph_vertex_count(g: *const TreepackGraph, out: *mut usize) -> TreepackStatus {
    guard(|| put(out, graph_ref(g)?.n()))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_graph_edge_count(g: *const TreepackGraph, out: *mut usize) -> TreepackStatus {
    guard(|| put(out, graph_ref(g)?.m()))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_graph_min_degree(g: *const TreepackGraph, out: *mut usize) -> TreepackStatus {
    guard(|| put(out, graph_ref(g)?.min_degree()))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_graph_is_connected(g: *const TreepackGraph, out: *mut bool) -> TreepackStatus {
    guard(|| put(out, graph_ref(g)?.is_connected()))
}

/// graph6 encoding of the graph.
///
/// # Safety
/// `g` must be a live handle, `needed` writable and `buffer` valid for
/// `capacity` bytes.
#[no_mangle]
pub unsafe extern "C" fn treepack_graph_to_graph6(
    g: *const TreepackGraph,
    buffer: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> TreepackStatus {
    guard(|| put_string(&write_graph6(graph_ref(g)?), buffer, capacity, needed))
}

/// Largest adjacency eigenvalue.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_spectral_radius(g: *const TreepackGraph, out: *mut f64) -> TreepackStatus {
    guard(|| put(out, spectral_radius(graph_ref(g)?)))
}

/// Exact number of spanning trees as a decimal string.
///
/// # Safety
/// `g` must be a live handle, `needed` writable and `buffer` valid for
/// `capacity` bytes.
#[no_mangle]
pub unsafe extern "C" fn treepack_spanning_tree_count(
    g: *const TreepackGraph,
    buffer: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> TreepackStatus {
    guard(|| {
        let count = spanning_tree_count(graph_ref(g)?).count.to_string();
        put_string(&count, buffer, capacity, needed)
    })
}

/// Maximum number of edge-disjoint spanning trees.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_packing_number(g: *const TreepackGraph, out: *mut usize) -> TreepackStatus {
    guard(|| put(out, stp_number(graph_ref(g)?).tau))
}

/// Edges of a maximum packing, flat as `u0 v0 u1 v1 ...`, tree after tree
/// (`n - 1` edges each). `needed` receives the number of values required.
///
/// # Safety
/// `g` must be a live handle, `needed` writable and `pairs` valid for
/// `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn treepack_packing_trees(
    g: *const TreepackGraph,
    pairs: *mut usize,
    capacity: usize,
    needed: *mut usize,
) -> TreepackStatus {
    guard(|| {
        let cert = stp_number(graph_ref(g)?);
        let flat: Vec<usize> = cert.trees.iter().flatten().flat_map(|&(u, v)| [u, v]).collect();
        put(needed, flat.len())?;
        if capacity < flat.len() {
            return Err(Failure(
                TreepackStatus::BufferTooSmall,
                format!("buffer holds {capacity} values, {} needed", flat.len()),
            ));
        }
        if !flat.is_empty() {
            if pairs.is_null() {
                return Err(null("pairs"));
            }
            ptr::copy_nonoverlapping(flat.as_ptr(), pairs, flat.len());
        }
        Ok(())
    })
}

/// Minimum number of forests covering the edges.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_arboricity(g: *const TreepackGraph, out: *mut usize) -> TreepackStatus {
    guard(|| put(out, arboricity(graph_ref(g)?).arboricity))
}

/// Global minimum edge cut. Needs at least two vertices.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_edge_connectivity(g: *const TreepackGraph, out: *mut usize) -> TreepackStatus {
    guard(|| put(out, edge_connectivity(graph_ref(g)?)?.0))
}

/// Edge-count check for `k` disjoint spanning trees.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_check_edge_theorem(g: *const TreepackGraph, k: usize, out: *mut TreepackVerdict) -> TreepackStatus {
    guard(|| put(out, verdict_code(check_edge_theorem(graph_ref(g)?, k).verdict)))
}

/// Spectral check for `k` disjoint spanning trees.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn treepack_check_spectral_theorem(
    g: *const TreepackGraph,
    k: usize,
    out: *mut TreepackVerdict,
) -> TreepackStatus {
    guard(|| put(out, verdict_code(check_spectral_theorem(graph_ref(g)?, k).verdict)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn last_error() -> String {
        let p = treepack_last_error_message();
        assert!(!p.is_null());
        unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
    }

    fn from_graph6(text: &str) -> *mut TreepackGraph {
        let c = CString::new(text).unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(unsafe { treepack_graph_from_graph6(c.as_ptr(), &mut g) }, TreepackStatus::Ok);
        g
    }

    #[test]
    fn k4_round_trip() {
        let g = from_graph6("C~");
        unsafe {
            let (mut n, mut m, mut tau, mut a, mut kappa) = (0, 0, 0, 0, 0);
            assert_eq!(treepack_graph_vertex_count(g, &mut n), TreepackStatus::Ok);
            assert_eq!(treepack_graph_edge_count(g, &mut m), TreepackStatus::Ok);
            assert_eq!(treepack_packing_number(g, &mut tau), TreepackStatus::Ok);
            assert_eq!(treepack_arboricity(g, &mut a), TreepackStatus::Ok);
            assert_eq!(treepack_edge_connectivity(g, &mut kappa), TreepackStatus::Ok);
            assert_eq!((n, m, tau, a, kappa), (4, 6, 2, 2, 3));
            let mut rho = 0.0;
            assert_eq!(treepack_spectral_radius(g, &mut rho), TreepackStatus::Ok);
            assert!((rho - 3.0).abs() < 1e-10);

            let mut buf = [0 as c_char; 16];
            let mut needed = 0;
            assert_eq!(treepack_spanning_tree_count(g, buf.as_mut_ptr(), buf.len(), &mut needed), TreepackStatus::Ok);
            assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "16");
            assert_eq!(needed, 3);
            assert_eq!(treepack_graph_to_graph6(g, buf.as_mut_ptr(), buf.len(), &mut needed), TreepackStatus::Ok);
            assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "C~");

            let mut pairs = [0usize; 12];
            assert_eq!(treepack_packing_trees(g, pairs.as_mut_ptr(), 12, &mut needed), TreepackStatus::Ok);
            assert_eq!(needed, 12);
            assert_eq!(treepack_packing_trees(g, pairs.as_mut_ptr(), 4, &mut needed), TreepackStatus::BufferTooSmall);
            treepack_graph_free(g);
        }
    }

    #[test]
    fn short_buffer_reports_size() {
        let g = from_graph6("C~");
        let mut buf = [0 as c_char; 2];
        let mut needed = 0;
        let status = unsafe { treepack_graph_to_graph6(g, buf.as_mut_ptr(), buf.len(), &mut needed) };
        assert_eq!(status, TreepackStatus::BufferTooSmall);
        assert_eq!(needed, 3);
        assert!(last_error().contains("needed"));
        unsafe { treepack_graph_free(g) };
    }

    #[test]
    fn errors_carry_messages() {
        let bad = CString::new("C~x").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(unsafe { treepack_graph_from_graph6(bad.as_ptr(), &mut g) }, TreepackStatus::ParseError);
        assert!(g.is_null());
        assert!(last_error().contains("byte"));

        assert_eq!(unsafe { treepack_graph_from_graph6(ptr::null(), &mut g) }, TreepackStatus::NullPointer);
        let mut n = 0;
        assert_eq!(unsafe { treepack_graph_vertex_count(ptr::null(), &mut n) }, TreepackStatus::NullPointer);

        let loops = [1usize, 1];
        assert_eq!(unsafe { treepack_graph_from_edges(3, loops.as_ptr(), 1, &mut g) }, TreepackStatus::InvalidArgument);
        assert_eq!(unsafe { treepack_book_graph(5, 4, 1, &mut g) }, TreepackStatus::InvalidArgument);

        let one = from_graph6("@");
        assert_eq!(unsafe { treepack_edge_connectivity(one, &mut n) }, TreepackStatus::InvalidArgument);
        unsafe { treepack_graph_free(one) };

        let ok = from_graph6("A_");
        assert!(treepack_last_error_message().is_null());
        unsafe { treepack_graph_free(ok) };
    }

    #[test]
    fn edge_inputs() {
        let text = CString::new("4 3\n0 1\n1 2\n2 3\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(unsafe { treepack_graph_from_edge_list(text.as_ptr(), &mut g) }, TreepackStatus::Ok);
        let mut connected = false;
        assert_eq!(unsafe { treepack_graph_is_connected(g, &mut connected) }, TreepackStatus::Ok);
        assert!(connected);
        unsafe { treepack_graph_free(g) };

        let pairs = [0usize, 1, 0, 1, 2, 3];
        assert_eq!(unsafe { treepack_graph_from_edges(4, pairs.as_ptr(), 3, &mut g) }, TreepackStatus::Ok);
        let mut m = 0;
        unsafe { treepack_graph_edge_count(g, &mut m) };
        assert_eq!(m, 2);
        assert_eq!(unsafe { treepack_graph_is_connected(g, &mut connected) }, TreepackStatus::Ok);
        assert!(!connected);
        unsafe { treepack_graph_free(g) };
    }

    #[test]
    fn constructions_and_checks() {
        let mut g = ptr::null_mut();
        unsafe {
            assert_eq!(treepack_book_graph(13, 4, 1, &mut g), TreepackStatus::Ok);
            let mut v = TreepackVerdict::Counterexample;
            assert_eq!(treepack_check_spectral_theorem(g, 2, &mut v), TreepackStatus::Ok);
            assert_eq!(v, TreepackVerdict::Consistent);
            assert_eq!(treepack_check_edge_theorem(g, 2, &mut v), TreepackStatus::Ok);
            assert_eq!(v, TreepackVerdict::Consistent);
            let mut delta = 0;
            treepack_graph_min_degree(g, &mut delta);
            assert_eq!(delta, 4);
            treepack_graph_free(g);

            assert_eq!(treepack_join_candidate(8, 2, &mut g), TreepackStatus::Ok);
            let mut tau = 0;
            treepack_packing_number(g, &mut tau);
            assert_eq!(tau, 2);
            treepack_graph_free(g);

            assert_eq!(treepack_complete_graph(7, &mut g), TreepackStatus::Ok);
            treepack_packing_number(g, &mut tau);
            assert_eq!(tau, 3);
            treepack_graph_free(g);
            treepack_graph_free(ptr::null_mut());
        }
        let v = unsafe { CStr::from_ptr(treepack_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
