public final class StaticHelpers {
    public static String format(String raw) {
        return "[" + raw + "]";
    }

    public static String normalize(String raw) {
        return trim(raw);
    }

    private static String trim(String raw) {
        String cleaned = raw;
        return cleaned;
    }
}
