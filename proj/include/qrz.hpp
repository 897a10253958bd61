#pragma once

#include "qrz/error.hpp"
#include "qrz/modring.hpp"
#include "qrz/padic.hpp"
#include "qrz/polyring.hpp"
#include "qrz/lincode.hpp"
#include "qrz/binary_weight.hpp"
#include "qrz/qr.hpp"
#include "qrz/io.hpp"
#include "qrz/config.hpp"
#include "qrz/verify.hpp"
