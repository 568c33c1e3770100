#pragma once

#include <stdexcept>
#include <string>

namespace solaris::wms {

struct WmsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct XmlMalformed : WmsError {
    using WmsError::WmsError;
};
struct NotACapabilitiesDocument : WmsError {
    using WmsError::WmsError;
};
struct NoLayers : WmsError {
    using WmsError::WmsError;
};

struct LayerNotFound : WmsError {
    using WmsError::WmsError;
};
struct FormatUnsupported : WmsError {
    using WmsError::WmsError;
};
struct CrsUnsupported : WmsError {
    using WmsError::WmsError;
};
struct DimensionOutOfRange : WmsError {
    using WmsError::WmsError;
};

struct BudgetExhausted : WmsError {
    using WmsError::WmsError;
};
struct LedgerError : WmsError {
    using WmsError::WmsError;
};

struct HttpError : WmsError {
    HttpError(int status_code, const std::string& what)
        : WmsError(what), status(status_code) {}
    int status;
};
struct RetriesExceeded : WmsError {
    using WmsError::WmsError;
};

}  // namespace solaris::wms
