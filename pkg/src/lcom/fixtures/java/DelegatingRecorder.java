public class DelegatingRecorder {
    private int buffer;
    private int cursor;
    private int limit;

    public void write(int b) {
        if (cursor < limit) {
            buffer = buffer + b;
        }
    }

    public void advance() {
        cursor = cursor + 1;
        flush();
    }

    public void flush() {
        // device write happens elsewhere
    }
}
