#pragma once

#include "errors.hpp"
#include "identities.hpp"
#include "natural.hpp"
#include "render.hpp"
#include "report.hpp"
#include "schreier.hpp"
#include "seq_core.hpp"
