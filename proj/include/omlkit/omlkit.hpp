#pragma once

#include "omlkit/catalog.hpp"
#include "omlkit/checks.hpp"
#include "omlkit/error.hpp"
#include "omlkit/foulis.hpp"
#include "omlkit/io.hpp"
#include "omlkit/linmap.hpp"
#include "omlkit/module_action.hpp"
#include "omlkit/oml.hpp"
#include "omlkit/report.hpp"
#include "omlkit/verify.hpp"
