#pragma once

#include "cavityqed/config.hpp"
#include "cavityqed/constants.hpp"
#include "cavityqed/eft.hpp"
#include "cavityqed/errors.hpp"
#include "cavityqed/manymode.hpp"
#include "cavityqed/response.hpp"
#include "cavityqed/singlemode.hpp"
#include "cavityqed/system.hpp"
#include "cavityqed/version.hpp"
