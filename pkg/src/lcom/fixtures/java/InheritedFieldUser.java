public class InheritedFieldUser extends BaseEntity {
    private String name;
    private long createdAt;

    public String summary() {
        return id + ":" + name + "@" + createdAt;
    }

    public long identifier() {
        return id;
    }

    public void touch(long now) {
        createdAt = now;
        name = "touched:" + name;
    }
}
